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

#include <string>

#include "stabfield/code_builder.hpp"

// Built-in instances. The files under models/ describe the same codes and are
// checked against these in the test suite.
namespace stabfield::geometries {

inline StabilizerModel cluster_chain(std::size_t n, double delta = 1.0) {
  return cluster_stabilizers(QubitGraph::chain(n), delta, {}, "cluster_chain_n" + std::to_string(n));
}

/// Ring closes 1-n, so vertex 1 carries X1 Z2 Zn.
inline StabilizerModel cluster_ring(std::size_t n, double delta = 1.0) {
  return cluster_stabilizers(QubitGraph::ring(n), delta, {}, "cluster_ring_n" + std::to_string(n));
}

inline StabilizerModel cluster_grid(std::size_t rows, std::size_t cols, double delta = 1.0) {
  return cluster_stabilizers(QubitGraph::grid(rows, cols), delta, {},
                             "cluster_grid_" + std::to_string(rows) + "x" + std::to_string(cols));
}

/// Two data qubits; checks -X1X2 and -Z1Z2 so the singlet is the +1 state.
inline StabilizerModel surface_n2(double delta = 1.0) {
  SurfaceLayout l{2, {{{1, 2}, -1}}, {{{1, 2}, -1}}};
  return surface_stabilizers(l, delta, {}, "surface_n2");
}

/// -delta (X1X3X4 + X2X3X5 + Z1Z2Z3 + Z3Z4Z5); logical Z1Z3Z5 fixes the
/// otherwise two-fold code space.
inline StabilizerModel surface_n5(double delta = 1.0) {
  SurfaceLayout l{5, {{{1, 3, 4}}, {{2, 3, 5}}}, {{{1, 2, 3}}, {{3, 4, 5}}}};
  return surface_stabilizers(l, delta, {PauliString::on(5, Pauli::Z, {1, 3, 5})}, "surface_n5");
}

/// 3x4 checkerboard cut: six checks on six qubits, unique +1 state.
inline StabilizerModel surface_n6(double delta = 1.0) {
  SurfaceLayout l{6, {{{1, 3, 5}}, {{2, 3, 4, 6}}}, {{{1, 2, 3}}, {{2, 4}}, {{3, 5, 6}}, {{4, 6}}}};
  return surface_stabilizers(l, delta, {}, "surface_n6");
}

/// 2x3 planar code: three X stars, four Z plaquettes, logical Z1Z6.
inline StabilizerModel surface_n8(double delta = 1.0) {
  SurfaceLayout l{8,
                  {{{1, 4, 6}}, {{2, 4, 5, 7}}, {{3, 5, 8}}},
                  {{{1, 2, 4}}, {{2, 3, 5}}, {{4, 6, 7}}, {{5, 7, 8}}}};
  return surface_stabilizers(l, delta, {PauliString::on(8, Pauli::Z, {1, 6})}, "surface_n8");
}

}  // namespace stabfield::geometries
