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

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "stabfield/errors.hpp"
#include "stabfield/pauli.hpp"
#include "stabfield/state_vector.hpp"

namespace stabfield {

/// Undirected simple graph on vertices 1..n_qubits.
struct QubitGraph {
  std::size_t n_qubits = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void validate() const {
    if (n_qubits == 0) throw ModelError("QubitGraph: no vertices");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges) {
      if (a < 1 || a > n_qubits || b < 1 || b > n_qubits) {
        throw ModelError("QubitGraph: edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has a vertex outside [1, " + std::to_string(n_qubits) + "]");
      }
      if (a == b) throw ModelError("QubitGraph: self-loop on vertex " + std::to_string(a));
      if (!seen.insert(std::minmax(a, b)).second) {
        throw ModelError("QubitGraph: duplicate edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
      }
    }
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (auto [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool connected() const {
    std::vector<std::size_t> parent(n_qubits + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    const auto root = find(1);
    for (std::size_t v = 2; v <= n_qubits; ++v) {
      if (find(v) != root) return false;
    }
    return true;
  }

  static QubitGraph chain(std::size_t n) {
    QubitGraph g{n, {}};
    for (std::size_t v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
    return g;
  }

  static QubitGraph ring(std::size_t n) {
    QubitGraph g = chain(n);
    if (n > 2) g.edges.emplace_back(n, 1);
    return g;
  }

  /// rows x cols square lattice, vertices numbered row-major from 1.
  static QubitGraph grid(std::size_t rows, std::size_t cols) {
    QubitGraph g{rows * cols, {}};
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c + 1; };
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (c + 1 < cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
        if (r + 1 < rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
      }
    }
    return g;
  }
};

/// One all-X or all-Z check; sign -1 flips the stabilizer (-X..X).
struct Check {
  std::vector<std::size_t> qubits;
  int sign = 1;
};

struct SurfaceLayout {
  std::size_t n_qubits = 0;
  std::vector<Check> x_checks;
  std::vector<Check> z_checks;
};

/// A code instance: commuting, self-inverse generators with energy gap delta.
///
/// `logicals` are extra commuting operators whose +1 eigenspace pins down a
/// unique reference state when the generators leave a degenerate code space.
/// They never enter the Hamiltonian.
class StabilizerModel {
 public:
  StabilizerModel(std::size_t n_qubits, std::vector<PauliString> generators, double delta,
                  std::vector<PauliString> logicals = {}, std::string name = {})
      : n_(n_qubits),
        generators_(std::move(generators)),
        logicals_(std::move(logicals)),
        delta_(delta),
        name_(std::move(name)) {
    if (!(delta_ > 0.0) || !std::isfinite(delta_)) {
      throw ModelError("StabilizerModel: gap must be positive and finite");
    }
    for (const auto* set : {&generators_, &logicals_}) {
      for (const auto& g : *set) {
        if (g.n_qubits() != n_) {
          throw ModelError("StabilizerModel: operator " + g.str() + " has " +
                           std::to_string(g.n_qubits()) + " qubits, model has " +
                           std::to_string(n_));
        }
        if (std::abs(g.coefficient()) != 1.0) {
          throw ModelError("StabilizerModel: operator " + g.str() + " must have coefficient +-1");
        }
      }
    }
    auto check_pair = [](const PauliString& a, const PauliString& b) {
      if (!commutes(a, b)) {
        throw ModelError("StabilizerModel: " + a.str() + " and " + b.str() + " anticommute");
      }
    };
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = i + 1; j < generators_.size(); ++j) check_pair(generators_[i], generators_[j]);
      for (const auto& l : logicals_) check_pair(generators_[i], l);
    }
    for (std::size_t i = 0; i < logicals_.size(); ++i) {
      for (std::size_t j = i + 1; j < logicals_.size(); ++j) check_pair(logicals_[i], logicals_[j]);
    }
  }

  std::size_t n_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  const std::vector<PauliString>& logicals() const { return logicals_; }
  double delta() const { return delta_; }
  const std::string& name() const { return name_; }

  StabilizerModel with_delta(double delta) const {
    return StabilizerModel(n_, generators_, delta, logicals_, name_);
  }

 private:
  std::size_t n_;
  std::vector<PauliString> generators_;
  std::vector<PauliString> logicals_;
  double delta_;
  std::string name_;
};

/// K_i = X_i prod_{j in nbhd(i)} Z_j, one per vertex.
inline StabilizerModel cluster_stabilizers(const QubitGraph& g, double delta = 1.0,
                                           std::vector<PauliString> logicals = {},
                                           std::string name = {}) {
  g.validate();
  if (!g.connected()) {
    std::clog << "warning: cluster graph with " << g.n_qubits
              << " vertices is disconnected; the state factorizes\n";
  }
  std::vector<PauliString> gens;
  gens.reserve(g.n_qubits);
  for (std::size_t v = 1; v <= g.n_qubits; ++v) {
    PauliString k = PauliString::on(g.n_qubits, Pauli::Z, g.neighbors(v));
    k.set(v, Pauli::X);
    gens.push_back(k);
  }
  return StabilizerModel(g.n_qubits, std::move(gens), delta, std::move(logicals), std::move(name));
}

/// One all-X generator per x-check, then one all-Z generator per z-check.
inline StabilizerModel surface_stabilizers(const SurfaceLayout& layout, double delta = 1.0,
                                           std::vector<PauliString> logicals = {},
                                           std::string name = {}) {
  if (layout.n_qubits == 0) throw ModelError("SurfaceLayout: no qubits");
  auto build = [&](const Check& c, Pauli letter) {
    if (c.qubits.empty()) throw ModelError("SurfaceLayout: empty check");
    if (c.sign != 1 && c.sign != -1) throw ModelError("SurfaceLayout: check sign must be +-1");
    std::set<std::size_t> uniq(c.qubits.begin(), c.qubits.end());
    if (uniq.size() != c.qubits.size()) throw ModelError("SurfaceLayout: repeated qubit in a check");
    for (auto q : c.qubits) {
      if (q < 1 || q > layout.n_qubits) {
        throw ModelError("SurfaceLayout: qubit " + std::to_string(q) + " outside [1, " +
                         std::to_string(layout.n_qubits) + "]");
      }
    }
    return PauliString::on(layout.n_qubits, letter, c.qubits, static_cast<double>(c.sign));
  };
  std::vector<PauliString> gens;
  for (const auto& c : layout.x_checks) gens.push_back(build(c, Pauli::X));
  for (const auto& c : layout.z_checks) gens.push_back(build(c, Pauli::Z));
  // Name the offending pair with layout indices before the generic model check.
  for (std::size_t i = 0; i < layout.x_checks.size(); ++i) {
    for (std::size_t j = 0; j < layout.z_checks.size(); ++j) {
      if (!commutes(gens[i], gens[layout.x_checks.size() + j])) {
        throw ModelError("SurfaceLayout: x_check " + std::to_string(i) + " " + gens[i].str() +
                         " anticommutes with z_check " + std::to_string(j) + " " +
                         gens[layout.x_checks.size() + j].str());
      }
    }
  }
  return StabilizerModel(layout.n_qubits, std::move(gens), delta, std::move(logicals), std::move(name));
}

/// H0 = -delta * sum_i K_i.
inline OperatorSum hamiltonian(const StabilizerModel& model) {
  OperatorSum h(model.n_qubits());
  for (const auto& g : model.generators()) {
    h.add(g.with_coefficient(-model.delta() * g.coefficient()));
  }
  return h;
}

namespace detail {

// psi <- (psi + K psi) / 2
inline void project_plus(const PauliString& k, StateVector& psi) {
  StateVector kpsi = apply_pauli(k, psi);
  for (std::size_t i = 0; i < psi.dim(); ++i) psi[i] = 0.5 * (psi[i] + kpsi[i]);
}

// Rotate the global phase so the first largest-magnitude amplitude is real positive.
inline void fix_global_phase(StateVector& psi) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < psi.dim(); ++i) {
    if (std::abs(psi[i]) > std::abs(psi[best]) * (1.0 + 1e-12)) best = i;
  }
  const double mag = std::abs(psi[best]);
  if (mag > 0.0) psi.scale(std::conj(psi[best]) / mag);
}

}  // namespace detail

/// Simultaneous +1 eigenstate of every generator (and logical), built by
/// projecting basis states |0...0>, |0...1>, ... until one survives.
inline StateVector ground_state(const StabilizerModel& model) {
  const auto n = model.n_qubits();
  if (n > kMaxDenseQubits) {
    throw ModelError("ground_state: " + std::to_string(n) + " qubits exceeds limit " +
                     std::to_string(kMaxDenseQubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t seed = 0; seed < dim; ++seed) {
    StateVector psi = StateVector::basis(n, seed);
    for (const auto& k : model.generators()) detail::project_plus(k, psi);
    for (const auto& l : model.logicals()) detail::project_plus(l, psi);
    if (psi.norm_squared() > 1e-10) {
      psi.normalize();
      detail::fix_global_phase(psi);
      return psi;
    }
  }
  throw ModelError("ground_state: projector chain annihilated every basis state; "
                   "generators cannot be commuting and independent of their negations");
}

/// <Phi0|H0|Phi0>; equals -delta * (#generators) for the +1 eigenstate.
inline double ground_energy(const StabilizerModel& model) {
  return expectation(hamiltonian(model), ground_state(model));
}

struct Level {
  double energy;
  std::size_t multiplicity;
};

/// Eigenvalues of a dense Hermitian matrix, ascending.
inline std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Groups sorted eigenvalues into levels; values within `tol` of the level's
/// first member are merged.
inline std::vector<Level> group_levels(const std::vector<double>& sorted, double tol = 1e-8) {
  std::vector<Level> levels;
  for (double e : sorted) {
    if (!levels.empty() && std::abs(e - levels.back().energy) <= tol) {
      ++levels.back().multiplicity;
    } else {
      levels.push_back({e, 1});
    }
  }
  return levels;
}

/// Full spectrum of dense H0 with degeneracies, ascending.
inline std::vector<Level> spectrum(const StabilizerModel& model, double tol = 1e-8) {
  return group_levels(hermitian_eigenvalues(to_dense(hamiltonian(model))), tol);
}

}  // namespace stabfield
