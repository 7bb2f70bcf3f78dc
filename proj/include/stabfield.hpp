// Copyright 2026 The stabfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "stabfield/analysis.hpp"
#include "stabfield/code_builder.hpp"
#include "stabfield/csv_io.hpp"
#include "stabfield/ensemble.hpp"
#include "stabfield/errors.hpp"
#include "stabfield/evolution.hpp"
#include "stabfield/experiment.hpp"
#include "stabfield/geometries.hpp"
#include "stabfield/model_io.hpp"
#include "stabfield/noise.hpp"
#include "stabfield/oracle.hpp"
#include "stabfield/pauli.hpp"
#include "stabfield/state_vector.hpp"
