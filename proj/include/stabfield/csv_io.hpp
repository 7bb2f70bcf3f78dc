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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "stabfield/analysis.hpp"
#include "stabfield/code_builder.hpp"
#include "stabfield/errors.hpp"
#include "stabfield/evolution.hpp"

namespace stabfield::io {

/// 17 significant digits, "%.17g"; round-trips every double.
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

/// Long format `t,fidelity,norm,sample`, traces concatenated in order.
inline void write_traces_csv(std::ostream& out, const std::vector<FidelityTrace>& traces) {
  out << "t,fidelity,norm,sample\n";
  for (const auto& tr : traces) {
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      out << fmt(tr.times[k]) << ',' << fmt(tr.fidelity[k]) << ',' << fmt(tr.norm[k]) << ','
          << tr.sample_index << '\n';
    }
  }
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& sweep) {
  out << "delta,mean_fidelity,std_fidelity,n_samples\n";
  for (const auto& p : sweep) {
    out << fmt(p.delta) << ',' << fmt(p.mean_avg_fidelity) << ',' << fmt(p.std_avg_fidelity) << ','
        << p.n_samples << '\n';
  }
}

inline void write_defects_csv(std::ostream& out, const std::vector<DefectPoint>& points) {
  out << "n_defect,mean_infidelity,std_infidelity,n_samples\n";
  for (const auto& p : points) {
    out << p.n_defect << ',' << fmt(p.mean_infidelity) << ',' << fmt(p.std_infidelity) << ','
        << p.n_samples << '\n';
  }
}

inline void write_spectrum_csv(std::ostream& out, const std::vector<Level>& levels) {
  out << "energy,multiplicity\n";
  for (const auto& l : levels) out << fmt(l.energy) << ',' << l.multiplicity << '\n';
}

/// Minimal reader for the trace CSV; used by tests and downstream tooling.
inline std::vector<FidelityTrace> read_traces_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,fidelity,norm,sample") {
    throw ConfigError("trace CSV: expected header 't,fidelity,norm,sample'");
  }
  std::vector<FidelityTrace> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double t, f, n;
    std::size_t s;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%zu", &t, &f, &n, &s) != 4) {
      throw ConfigError("trace CSV: malformed row '" + line + "'");
    }
    if (out.empty() || out.back().sample_index != s) {
      out.emplace_back();
      out.back().sample_index = s;
    }
    out.back().times.push_back(t);
    out.back().fidelity.push_back(f);
    out.back().norm.push_back(n);
  }
  return out;
}

inline std::vector<FidelityTrace> read_traces_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return read_traces_csv(in);
}

}  // namespace stabfield::io
