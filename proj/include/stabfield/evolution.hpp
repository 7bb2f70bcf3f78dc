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

#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stabfield/code_builder.hpp"
#include "stabfield/errors.hpp"
#include "stabfield/noise.hpp"
#include "stabfield/pauli.hpp"
#include "stabfield/state_vector.hpp"

namespace stabfield {

/// Time in units of hbar/gap, alpha in gap/hbar.
struct EvolutionConfig {
  double dt = 1e-3;
  double t_max = 6.0;
  double alpha = 0.0;
  std::size_t record_stride = 10;

  void validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("evolution: dt must be positive");
    if (!(t_max >= dt) || !std::isfinite(t_max)) throw ConfigError("evolution: t_max must be >= dt");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("evolution: alpha must be >= 0");
    if (record_stride < 1) throw ConfigError("evolution: record_stride must be >= 1");
  }

  std::size_t n_steps() const { return static_cast<std::size_t>(std::llround(t_max / dt)); }
};

struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> fidelity;
  std::vector<double> norm;
  std::size_t sample_index = 0;
};

/// Callable computing out = H(t) * in (overwriting out).
template <class H>
concept TimeDependentOperator =
    requires(const H& h, double t, std::span<const Complex> in, std::span<Complex> out) {
      h(t, in, out);
    };

/// Pauli sum pre-grouped by X-mask: out[b ^ x] += c_x[b] * in[b]. One pass
/// per distinct X-mask instead of one per term.
class CompiledOperator {
 public:
  explicit CompiledOperator(const OperatorSum& op) : dim_(std::size_t{1} << op.n_qubits()) {
    std::map<std::uint64_t, std::vector<Complex>> groups;
    for (const auto& t : op.terms()) {
      auto& coeffs = groups[t.x_mask()];
      if (coeffs.empty()) coeffs.assign(dim_, Complex{});
      const Complex c = t.phase();
      for (std::size_t b = 0; b < dim_; ++b) coeffs[b] += c * detail::parity_sign(b & t.z_mask());
    }
    for (auto& [x, coeffs] : groups) {
      masks_.push_back(x);
      coeffs_.push_back(std::move(coeffs));
    }
  }

  std::size_t dim() const { return dim_; }

  void apply_add(std::span<const Complex> in, std::span<Complex> out) const {
    for (std::size_t g = 0; g < masks_.size(); ++g) {
      const auto x = masks_[g];
      const auto& c = coeffs_[g];
      for (std::size_t b = 0; b < dim_; ++b) out[b ^ x] += c[b] * in[b];
    }
  }

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<Complex>> coeffs_;
};

/// Time-independent operator adapter.
class StaticOperator {
 public:
  explicit StaticOperator(const OperatorSum& op) : op_(op) {}
  void operator()(double, std::span<const Complex> in, std::span<Complex> out) const {
    std::fill(out.begin(), out.end(), Complex{});
    op_.apply_add(in, out);
  }

 private:
  CompiledOperator op_;
};

/// H(t) = H0 + H1(t) - i*alpha. The optical potential is written with the
/// decaying sign so the norm falls as e^{-alpha t}.
class NoisyHamiltonian {
 public:
  NoisyHamiltonian(const StabilizerModel& model, FieldSample fields, double alpha = 0.0)
      : n_(model.n_qubits()), h0_(hamiltonian(model)), fields_(std::move(fields)), alpha_(alpha) {
    if (fields_.n_qubits() != n_) {
      throw ModelError("NoisyHamiltonian: field sample has " + std::to_string(fields_.n_qubits()) +
                       " qubits, model has " + std::to_string(n_));
    }
    for (std::size_t q = 1; q <= n_; ++q) {
      if (fields_.g[q - 1] != 0.0 || fields_.h[q - 1] != 0.0) active_.push_back(q);
    }
  }

  void operator()(double t, std::span<const Complex> in, std::span<Complex> out) const {
    const std::size_t dim = in.size();
    for (std::size_t b = 0; b < dim; ++b) out[b] = Complex{0.0, -alpha_} * in[b];
    h0_.apply_add(in, out);
    for (auto q : active_) {
      const auto bit = std::uint64_t{1} << (n_ - q);
      const double gx = fields_.g[q - 1] * std::cos(fields_.omega_x[q - 1] * t);
      const double hz = fields_.h[q - 1] * std::cos(fields_.omega_z[q - 1] * t);
      for (std::size_t b = 0; b < dim; ++b) {
        out[b ^ bit] += gx * in[b];
        out[b] += ((b & bit) ? -hz : hz) * in[b];
      }
    }
  }

 private:
  std::size_t n_;
  CompiledOperator h0_;
  FieldSample fields_;
  double alpha_;
  std::vector<std::size_t> active_;
};

/// Scratch buffers for rk4_step, sized on first use.
struct Rk4Workspace {
  std::vector<Complex> k1, k2, k3, k4, tmp;
  void ensure(std::size_t dim) {
    if (k1.size() == dim) return;
    for (auto* v : {&k1, &k2, &k3, &k4, &tmp}) v->assign(dim, Complex{});
  }
};

/// One classical RK4 step of psi' = -i H(t) psi (hbar = 1), with H sampled at
/// t, t + dt/2 and t + dt.
template <TimeDependentOperator H>
void rk4_step(const H& h, StateVector& psi, double t, double dt, Rk4Workspace& ws) {
  const std::size_t dim = psi.dim();
  ws.ensure(dim);
  const Complex minus_i{0.0, -1.0};
  auto stage = [&](double ts, std::span<const Complex> in, std::vector<Complex>& k) {
    h(ts, in, k);
    for (auto& v : k) v *= minus_i;
  };
  auto combine = [&](const std::vector<Complex>& k, double f) {
    for (std::size_t b = 0; b < dim; ++b) ws.tmp[b] = psi[b] + f * k[b];
  };
  stage(t, psi.span(), ws.k1);
  combine(ws.k1, 0.5 * dt);
  stage(t + 0.5 * dt, ws.tmp, ws.k2);
  combine(ws.k2, 0.5 * dt);
  stage(t + 0.5 * dt, ws.tmp, ws.k3);
  combine(ws.k3, dt);
  stage(t + dt, ws.tmp, ws.k4);
  const double w = dt / 6.0;
  for (std::size_t b = 0; b < dim; ++b) {
    psi[b] += w * (ws.k1[b] + 2.0 * ws.k2[b] + 2.0 * ws.k3[b] + ws.k4[b]);
  }
  if (!psi.all_finite()) {
    throw NumericError("rk4_step: non-finite amplitude after step at t=" + std::to_string(t) +
                       " with dt=" + std::to_string(dt) + " (step too large?)");
  }
}

template <TimeDependentOperator H>
StateVector rk4_step(const H& h, const StateVector& psi, double t, double dt) {
  StateVector out = psi;
  Rk4Workspace ws;
  rk4_step(h, out, t, dt, ws);
  return out;
}

/// Fixed-step RK4 from t0 over n_steps steps of size dt.
template <TimeDependentOperator H>
StateVector rk4_integrate(const H& h, StateVector psi, double t0, double dt, std::size_t n_steps) {
  Rk4Workspace ws;
  for (std::size_t k = 0; k < n_steps; ++k) rk4_step(h, psi, t0 + static_cast<double>(k) * dt, dt, ws);
  return psi;
}

/// e^{-i E0 t} |Phi0>, with E0 the ground energy of H0.
inline StateVector reference_state(const StabilizerModel& model, double t) {
  StateVector psi = ground_state(model);
  const double e0 = expectation(hamiltonian(model), psi);
  psi.scale(std::polar(1.0, -e0 * t));
  return psi;
}

/// Same state obtained by integrating H0 numerically; a cross-check for the
/// analytic phase.
inline StateVector reference_state_numeric(const StabilizerModel& model, double t, double dt = 1e-3) {
  const auto steps = static_cast<std::size_t>(std::llround(t / dt));
  if (steps == 0) return reference_state(model, t);
  return rk4_integrate(StaticOperator(hamiltonian(model)), ground_state(model), 0.0, t / steps, steps);
}

/// Integrates H0 + H1(t) - i*alpha from the ground state and records
/// F(t) = |<Phi0(t)|Phi(t)>|^2 against the unnormalized evolved state.
class TraceRunner {
 public:
  explicit TraceRunner(const StabilizerModel& model)
      : model_(model), ground_(ground_state(model)), e0_(expectation(hamiltonian(model), ground_)) {}

  const StateVector& ground() const { return ground_; }
  double ground_energy() const { return e0_; }

  FidelityTrace run(const FieldSample& sample, const EvolutionConfig& config,
                    std::size_t sample_index = 0) const {
    config.validate();
    if (sample.n_qubits() != model_.n_qubits()) {
      throw ModelError("evolve_trace: sample has " + std::to_string(sample.n_qubits()) +
                       " qubits, model has " + std::to_string(model_.n_qubits()));
    }
    const NoisyHamiltonian h(model_, sample, config.alpha);
    const std::size_t steps = config.n_steps();
    FidelityTrace trace;
    trace.sample_index = sample_index;
    StateVector psi = ground_;
    Rk4Workspace ws;
    auto record = [&](std::size_t step) {
      const double t = static_cast<double>(step) * config.dt;
      // |<e^{-iE0 t} Phi0 | psi>|^2; the reference phase drops out of the modulus.
      trace.times.push_back(t);
      trace.fidelity.push_back(std::norm(std::polar(1.0, e0_ * t) * inner(ground_, psi)));
      trace.norm.push_back(psi.norm());
    };
    record(0);
    for (std::size_t k = 0; k < steps; ++k) {
      rk4_step(h, psi, static_cast<double>(k) * config.dt, config.dt, ws);
      if ((k + 1) % config.record_stride == 0 || k + 1 == steps) record(k + 1);
    }
    return trace;
  }

 private:
  StabilizerModel model_;
  StateVector ground_;
  double e0_;
};

inline FidelityTrace evolve_trace(const StabilizerModel& model, const FieldSample& sample,
                                  const EvolutionConfig& config, std::size_t sample_index = 0) {
  return TraceRunner(model).run(sample, config, sample_index);
}

}  // namespace stabfield
