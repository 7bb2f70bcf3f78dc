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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "stabfield/errors.hpp"
#include "stabfield/pauli.hpp"

namespace stabfield {

/// Bounds for the random local fields, in units of the gap (frequencies in
/// gap/hbar).
struct NoiseParams {
  double g_ave = 0.0;
  double h_ave = 0.0;
  double omega_x_ave = 0.0;
  double omega_z_ave = 0.0;
  std::size_t n_samples = 10;
  std::uint64_t seed = 0;

  /// All four bounds set to the same scale.
  static NoiseParams uniform(double delta, std::size_t n_samples = 10, std::uint64_t seed = 0) {
    return {delta, delta, delta, delta, n_samples, seed};
  }

  void validate() const {
    for (double v : {g_ave, h_ave, omega_x_ave, omega_z_ave}) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw ConfigError("NoiseParams: bounds must be finite and nonnegative");
      }
    }
    if (n_samples < 1) throw ConfigError("NoiseParams: n_samples must be at least 1");
  }
};

/// Qubits (1-based) that carry fluctuating fields.
class DefectMask {
 public:
  DefectMask(std::size_t n_qubits, std::vector<std::size_t> active)
      : n_(n_qubits), active_(n_qubits + 1, false) {
    for (auto q : active) {
      if (q < 1 || q > n_qubits) {
        throw ModelError("DefectMask: qubit " + std::to_string(q) + " outside [1, " +
                         std::to_string(n_qubits) + "]");
      }
      active_[q] = true;
    }
  }

  static DefectMask all(std::size_t n_qubits) {
    std::vector<std::size_t> q(n_qubits);
    std::iota(q.begin(), q.end(), std::size_t{1});
    return DefectMask(n_qubits, std::move(q));
  }

  std::size_t n_qubits() const { return n_; }
  bool active(std::size_t q) const { return q >= 1 && q <= n_ && active_[q]; }
  std::size_t count() const {
    return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
  }
  std::vector<std::size_t> sites() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 1; q <= n_; ++q) {
      if (active_[q]) out.push_back(q);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<bool> active_;
};

/// One draw of per-qubit amplitudes and angular frequencies; index 0 is qubit 1.
struct FieldSample {
  std::vector<double> g, h, omega_x, omega_z;

  explicit FieldSample(std::size_t n_qubits = 0)
      : g(n_qubits, 0.0), h(n_qubits, 0.0), omega_x(n_qubits, 0.0), omega_z(n_qubits, 0.0) {}

  std::size_t n_qubits() const { return g.size(); }
  bool is_zero() const {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0.0 || h[i] != 0.0) return false;
    }
    return true;
  }
};

/// Counter-based stream: every draw is a pure function of its key, so samples
/// can be generated in any order or in parallel.
namespace rng {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t { kG = 0, kH = 1, kOmegaX = 2, kOmegaZ = 3, kDefect = 4 };

inline constexpr std::uint64_t key(std::uint64_t seed, std::uint64_t sample, Stream stream,
                                   std::uint64_t counter) {
  std::uint64_t k = splitmix64(seed);
  k = splitmix64(k ^ sample);
  k = splitmix64(k ^ static_cast<std::uint64_t>(stream));
  return splitmix64(k ^ counter);
}

/// Uniform on [-1, 1) with 53 random bits.
inline constexpr double symmetric_unit(std::uint64_t bits) {
  return 2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
}

/// Uniform integer in [0, bound) via 128-bit multiply-shift.
inline std::uint64_t below(std::uint64_t bits, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits) * bound) >> 64);
}

}  // namespace rng

/// Four independent uniform [-1,1] draws per active qubit, scaled by the
/// respective bound. Inactive qubits stay exactly zero.
inline FieldSample sample_fields(const NoiseParams& params, const DefectMask& mask,
                                 std::size_t sample_index) {
  params.validate();
  FieldSample s(mask.n_qubits());
  for (std::size_t q = 1; q <= mask.n_qubits(); ++q) {
    if (!mask.active(q)) continue;
    auto draw = [&](rng::Stream stream) {
      return rng::symmetric_unit(rng::key(params.seed, sample_index, stream, q));
    };
    s.g[q - 1] = params.g_ave * draw(rng::Stream::kG);
    s.h[q - 1] = params.h_ave * draw(rng::Stream::kH);
    s.omega_x[q - 1] = params.omega_x_ave * draw(rng::Stream::kOmegaX);
    s.omega_z[q - 1] = params.omega_z_ave * draw(rng::Stream::kOmegaZ);
  }
  return s;
}

/// Uniformly random subset of `count` sites for one ensemble member (partial
/// Fisher-Yates on counter draws).
inline DefectMask random_defect_mask(std::size_t n_qubits, std::size_t count, std::uint64_t seed,
                                     std::size_t sample_index) {
  if (count > n_qubits) {
    throw ModelError("random_defect_mask: " + std::to_string(count) + " defects on " +
                     std::to_string(n_qubits) + " qubits");
  }
  std::vector<std::size_t> sites(n_qubits);
  std::iota(sites.begin(), sites.end(), std::size_t{1});
  for (std::size_t i = 0; i < count; ++i) {
    const auto bits = rng::key(seed, sample_index, rng::Stream::kDefect, (count << 32) | i);
    const auto j = i + rng::below(bits, n_qubits - i);
    std::swap(sites[i], sites[j]);
  }
  sites.resize(count);
  return DefectMask(n_qubits, std::move(sites));
}

/// H1(t) = sum_i g_i cos(w^x_i t) X_i + h_i cos(w^z_i t) Z_i; qubits with zero
/// amplitude contribute no term.
inline OperatorSum field_hamiltonian(const FieldSample& s, double t) {
  const auto n = s.n_qubits();
  OperatorSum h1(n);
  for (std::size_t q = 1; q <= n; ++q) {
    if (s.g[q - 1] != 0.0) {
      h1.add(PauliString::on(n, Pauli::X, {q}, s.g[q - 1] * std::cos(s.omega_x[q - 1] * t)));
    }
    if (s.h[q - 1] != 0.0) {
      h1.add(PauliString::on(n, Pauli::Z, {q}, s.h[q - 1] * std::cos(s.omega_z[q - 1] * t)));
    }
  }
  return h1;
}

}  // namespace stabfield
