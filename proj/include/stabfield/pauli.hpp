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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "stabfield/errors.hpp"
#include "stabfield/state_vector.hpp"

namespace stabfield {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Real-weighted tensor product of single-qubit Pauli matrices.
///
/// Stored symplectically: bit (N - q) of x_mask / z_mask carries the X / Z
/// part of qubit q (1-based), matching the state-vector basis ordering.
/// A Y letter is both bits set; the i in Y = iXZ is folded in on application.
class PauliString {
 public:
  explicit PauliString(std::size_t n_qubits, double coefficient = 1.0)
      : n_(n_qubits), coefficient_(coefficient) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
      throw ModelError("PauliString: qubit count " + std::to_string(n_qubits) +
                       " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
  }

  /// Parses strings like "XZIZ", "+XX", "-ZZ" or "X_Z" ('_' == 'I').
  static PauliString from_letters(std::string_view text, double coefficient = 1.0) {
    double sign = 1.0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
      sign = text.front() == '-' ? -1.0 : 1.0;
      text.remove_prefix(1);
    }
    PauliString p(text.size(), sign * coefficient);
    for (std::size_t k = 0; k < text.size(); ++k) {
      switch (text[k]) {
        case 'I': case '_': break;
        case 'X': p.set(k + 1, Pauli::X); break;
        case 'Y': p.set(k + 1, Pauli::Y); break;
        case 'Z': p.set(k + 1, Pauli::Z); break;
        default:
          throw ModelError(std::string("PauliString: bad letter '") + text[k] + "'");
      }
    }
    return p;
  }

  /// Product of `letter` over `qubits` (1-based); identity elsewhere.
  static PauliString on(std::size_t n_qubits, Pauli letter,
                        const std::vector<std::size_t>& qubits,
                        double coefficient = 1.0) {
    PauliString p(n_qubits, coefficient);
    for (auto q : qubits) p.set(q, letter);
    return p;
  }

  std::size_t n_qubits() const { return n_; }
  double coefficient() const { return coefficient_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  PauliString with_coefficient(double c) const {
    PauliString p = *this;
    p.coefficient_ = c;
    return p;
  }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

  Pauli letter(std::size_t qubit) const {
    const auto bit = bit_of(qubit);
    const bool x = (x_ >> bit) & 1U;
    const bool z = (z_ >> bit) & 1U;
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
  }

  void set(std::size_t qubit, Pauli p) {
    const auto m = std::uint64_t{1} << bit_of(qubit);
    x_ &= ~m;
    z_ &= ~m;
    if (p == Pauli::X || p == Pauli::Y) x_ |= m;
    if (p == Pauli::Z || p == Pauli::Y) z_ |= m;
  }

  /// Letters with a leading sign, e.g. "+XZIZ". Magnitude is not printed.
  std::string str() const {
    std::string s(1, coefficient_ < 0 ? '-' : '+');
    for (std::size_t q = 1; q <= n_; ++q) s += "IXYZ"[static_cast<int>(letter(q))];
    return s;
  }

  /// Phase i^{#Y} times the coefficient: P = phase() * X^x Z^z.
  Complex phase() const {
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return coefficient_ * kIPow[std::popcount(x_ & z_) & 3];
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_ &&
           a.coefficient_ == b.coefficient_;
  }

 private:
  std::size_t bit_of(std::size_t qubit) const {
    if (qubit == 0 || qubit > n_) {
      throw ModelError("PauliString: qubit " + std::to_string(qubit) +
                       " outside [1, " + std::to_string(n_) + "]");
    }
    return n_ - qubit;
  }

  std::size_t n_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  double coefficient_;
};

/// True iff a and b commute: even number of positions where the two letters
/// anticommute.
inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ModelError("commutes: qubit counts differ (" +
                     std::to_string(a.n_qubits()) + " vs " +
                     std::to_string(b.n_qubits()) + ")");
  }
  const auto anti = (a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask());
  return std::popcount(anti) % 2 == 0;
}

/// Sum of Pauli strings on a common register.
class OperatorSum {
 public:
  explicit OperatorSum(std::size_t n_qubits) : n_(n_qubits) {}

  OperatorSum(std::size_t n_qubits, std::vector<PauliString> terms) : n_(n_qubits) {
    for (auto& t : terms) add(std::move(t));
  }

  void add(PauliString term) {
    if (term.n_qubits() != n_) {
      throw ModelError("OperatorSum: term on " + std::to_string(term.n_qubits()) +
                       " qubits added to a " + std::to_string(n_) + "-qubit sum");
    }
    terms_.push_back(std::move(term));
  }

  void append(const OperatorSum& other) {
    for (const auto& t : other.terms()) add(t);
  }

  std::size_t n_qubits() const { return n_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::size_t n_;
  std::vector<PauliString> terms_;
};

namespace detail {

inline double parity_sign(std::uint64_t v) {
  return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

}  // namespace detail

/// out += scale * ps * in. No allocation; `in` and `out` must not alias.
inline void apply_pauli_add(const PauliString& ps, std::span<const Complex> in,
                            std::span<Complex> out, Complex scale = 1.0) {
  const auto x = ps.x_mask();
  const auto z = ps.z_mask();
  const Complex c = scale * ps.phase();
  for (std::size_t b = 0; b < in.size(); ++b) {
    out[b ^ x] += c * detail::parity_sign(b & z) * in[b];
  }
}

inline StateVector apply_pauli(const PauliString& ps, const StateVector& psi) {
  if (ps.n_qubits() != psi.n_qubits()) {
    throw ModelError("apply_pauli: operator on " + std::to_string(ps.n_qubits()) +
                     " qubits applied to a " + std::to_string(psi.n_qubits()) +
                     "-qubit state");
  }
  StateVector out(psi.n_qubits());
  apply_pauli_add(ps, psi.span(), out.span());
  return out;
}

inline StateVector apply(const OperatorSum& op, const StateVector& psi) {
  if (op.n_qubits() != psi.n_qubits()) {
    throw ModelError("apply: operator on " + std::to_string(op.n_qubits()) +
                     " qubits applied to a " + std::to_string(psi.n_qubits()) +
                     "-qubit state");
  }
  StateVector out(psi.n_qubits());
  for (const auto& t : op.terms()) apply_pauli_add(t, psi.span(), out.span());
  return out;
}

/// <psi|op|psi> (real part; op is Hermitian for every sum we build).
inline double expectation(const OperatorSum& op, const StateVector& psi) {
  return inner(psi, apply(op, psi)).real();
}

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Dense 2^N x 2^N matrix of the sum. Refuses N > 12.
inline Eigen::MatrixXcd to_dense(const OperatorSum& op) {
  const auto n = op.n_qubits();
  if (n > kMaxDenseQubits) {
    throw ModelError("to_dense: " + std::to_string(n) + " qubits exceeds the dense limit of " +
                     std::to_string(kMaxDenseQubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : op.terms()) {
    const Complex c = t.phase();
    for (std::size_t b = 0; b < dim; ++b) {
      m(b ^ t.x_mask(), b) += c * detail::parity_sign(b & t.z_mask());
    }
  }
  return m;
}

}  // namespace stabfield
