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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabfield/errors.hpp"

namespace stabfield {

using Complex = std::complex<double>;

/// Largest register the matrix-free kernels accept. Basis indices and Pauli
/// masks are 64-bit, but memory is the practical limit long before that.
inline constexpr std::size_t kMaxQubits = 24;

/// Amplitudes of an N-qubit pure state in the computational basis.
///
/// Basis ordering: qubit 1 is the most significant bit, so basis index
/// b = sum_q bit_q * 2^(N-q).
class StateVector {
 public:
  StateVector() = default;

  explicit StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_size(n_qubits);
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  }

  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_size(n_qubits);
    if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
      throw ModelError("StateVector: expected " +
                       std::to_string(std::size_t{1} << n_qubits) +
                       " amplitudes, got " +
                       std::to_string(amplitudes_.size()));
    }
  }

  static StateVector basis(std::size_t n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) throw ModelError("StateVector::basis: index out of range");
    s.amplitudes_[index] = 1.0;
    return s;
  }

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }

  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  std::span<Complex> span() { return amplitudes_; }
  std::span<const Complex> span() const { return amplitudes_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  void scale(Complex factor) {
    for (auto& a : amplitudes_) a *= factor;
  }

  /// Rescales to unit norm; returns the norm before rescaling.
  double normalize() {
    const double n = norm();
    if (n > 0.0) scale(1.0 / n);
    return n;
  }

  bool all_finite() const {
    for (const auto& a : amplitudes_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    }
    return true;
  }

 private:
  static void check_size(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
      throw ModelError("StateVector: qubit count " + std::to_string(n) +
                       " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
  }

  std::size_t n_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugating the left argument.
inline Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw ModelError("inner: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// |<a|b>|^2 without renormalizing either side.
inline double overlap_squared(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

/// Euclidean distance ||a - b||.
inline double distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw ModelError("distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace stabfield
