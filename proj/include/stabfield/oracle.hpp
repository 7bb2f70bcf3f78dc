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
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "stabfield/code_builder.hpp"
#include "stabfield/errors.hpp"
#include "stabfield/state_vector.hpp"

namespace stabfield::oracle {

/// Static local fields on the two-qubit minimal codes, in units where the gap
/// is `delta`.
struct TwoQubitFields {
  double h1 = 0.0;
  double h2 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double delta = 1.0;

  double q1() const { return std::sqrt(delta * delta + h1 * h1); }
  double q2() const { return std::sqrt(delta * delta + h2 * h2); }
  double h_plus() const { return h1 + h2; }
  double h_minus() const { return h1 - h2; }
};

/// Minimal cluster H0 = -delta (X1 Z2 + Z1 X2) plus fields, in the excitation
/// basis {Phi0, Z1 Phi0, Z2 Phi0, Z1 Z2 Phi0}.
inline Eigen::Matrix4cd cluster2_hamiltonian(const TwoQubitFields& f) {
  const double d = f.delta;
  Eigen::Matrix4d m;
  m << -2 * d, f.h1 + f.g2, f.h2 + f.g1, 0,
       f.h1 + f.g2, 0, 0, f.h2 - f.g1,
       f.h2 + f.g1, 0, 0, f.h1 - f.g2,
       0, f.h2 - f.g1, f.h1 - f.g2, 2 * d;
  return m.cast<Complex>();
}

/// Columns are Phi0, Z1 Phi0, Z2 Phi0, Z1 Z2 Phi0 in the computational basis;
/// U^dagger H_full U reproduces cluster2_hamiltonian.
inline Eigen::Matrix4cd cluster2_basis(const StabilizerModel& cluster2) {
  if (cluster2.n_qubits() != 2) throw ModelError("cluster2_basis: model must have two qubits");
  const StateVector phi = ground_state(cluster2);
  const std::array<PauliString, 4> ops = {
      PauliString::from_letters("II"), PauliString::from_letters("ZI"),
      PauliString::from_letters("IZ"), PauliString::from_letters("ZZ")};
  Eigen::Matrix4cd u;
  for (int c = 0; c < 4; ++c) {
    const StateVector col = apply_pauli(ops[c], phi);
    for (int r = 0; r < 4; ++r) u(r, c) = col[r];
  }
  return u;
}

/// Exact eigenvalues for g = 0: +-q1 +- q2, ascending. The field-dressed
/// problem factorizes into two 2x2 blocks [[-delta, h_i], [h_i, delta]].
inline std::array<double, 4> cluster2_eigs(const TwoQubitFields& f) {
  const double a = f.q1(), b = f.q2();
  std::array<double, 4> e = {-a - b, -a + b, a - b, a + b};
  std::sort(e.begin(), e.end());
  return e;
}

/// The closed form 2 delta^2 + h1^2 + h2^2 +- 2 sqrt((delta^2+h1^2)(delta^2+h2^2)).
/// Dimensionally this is E^2, and it equals (q1 +- q2)^2.
inline std::array<double, 2> cluster2_energy_squared(const TwoQubitFields& f) {
  const double d2 = f.delta * f.delta;
  const double base = 2 * d2 + f.h1 * f.h1 + f.h2 * f.h2;
  const double root = 2 * std::sqrt((d2 + f.h1 * f.h1) * (d2 + f.h2 * f.h2));
  return {base - root, base + root};
}

struct ClusterGround {
  double a, b, c, d;  // on Phi0, Z1 Phi0, Z2 Phi0, Z1 Z2 Phi0
  /// a^2+b^2+c^2+d^2 with the closed-form normalizer D^c. Not 1 in general:
  /// D^c omits the cross terms of ((q1+delta)^2 + h1^2)((q2+delta)^2 + h2^2).
  double norm_squared() const { return a * a + b * b + c * c + d * d; }
  Eigen::Vector4cd normalized() const {
    Eigen::Vector4d v(a, b, c, d);
    return (v / v.norm()).cast<Complex>();
  }
};

/// Ground-state coefficients for g = 0 with D^c = (q1+delta)^2 (q2+delta)^2 + h1^2 h2^2.
inline ClusterGround cluster2_ground(const TwoQubitFields& f) {
  if (f.g1 != 0.0 || f.g2 != 0.0) throw ModelError("cluster2_ground: requires g1 = g2 = 0");
  const double d = f.delta, q1 = f.q1(), q2 = f.q2();
  const double dc = (q1 + d) * (q1 + d) * (q2 + d) * (q2 + d) + f.h1 * f.h1 * f.h2 * f.h2;
  const double s = std::sqrt(dc);
  return {(q1 + d) * (q2 + d) / s, -f.h1 * (q2 + d) / s, -f.h2 * (q1 + d) / s, f.h1 * f.h2 / s};
}

/// Full two-qubit surface operator with fields in the computational basis
/// {|00>, |01>, |10>, |11>}, for stabilizers {-X X, -Z Z}:
/// H = delta (X X + Z Z) + h1 Z1 + h2 Z2 + g1 X1 + g2 X2.
inline Eigen::Matrix4cd surface2_hamiltonian(const TwoQubitFields& f) {
  const double d = f.delta, hp = f.h_plus(), hm = f.h_minus();
  Eigen::Matrix4d m;
  m << d + hp, f.g2, f.g1, d,
       f.g2, -d + hm, d, f.g1,
       f.g1, d, -d - hm, f.g2,
       d, f.g1, f.g2, d - hp;
  return m.cast<Complex>();
}

/// E_- = -delta +- sqrt(delta^2 + h_m^2), E_+ = delta +- sqrt(delta^2 + h_p^2), ascending.
inline std::array<double, 4> surface2_eigs(const TwoQubitFields& f) {
  if (f.g1 != 0.0 || f.g2 != 0.0) throw ModelError("surface2_eigs: requires g1 = g2 = 0");
  const double d = f.delta;
  const double rm = std::sqrt(d * d + f.h_minus() * f.h_minus());
  const double rp = std::sqrt(d * d + f.h_plus() * f.h_plus());
  std::array<double, 4> e = {-d - rm, -d + rm, d - rp, d + rp};
  std::sort(e.begin(), e.end());
  return e;
}

struct SurfaceGround {
  double b, c;  // state b|01> - c|10>
  StateVector state() const {
    return StateVector(2, {Complex{}, Complex{b}, Complex{-c}, Complex{}});
  }
};

/// Lowest state of the odd-parity sector, energy -delta - sqrt(D). It is the
/// global ground state only while sqrt(delta^2 + h_p^2) - sqrt(D) < 2 delta.
/// b = delta / N, c = (h_m + sqrt(D)) / N with D = delta^2 + h_m^2 and
/// N = sqrt(2 sqrt(D) (sqrt(D) + h_m)).
inline SurfaceGround surface2_ground(const TwoQubitFields& f) {
  if (f.g1 != 0.0 || f.g2 != 0.0) throw ModelError("surface2_ground: requires g1 = g2 = 0");
  const double hm = f.h_minus();
  const double root_d = std::sqrt(f.delta * f.delta + hm * hm);
  const double n = std::sqrt(2 * root_d * (root_d + hm));
  return {f.delta / n, (hm + root_d) / n};
}

/// e^{-i H t} psi0 (times e^{-alpha t} when alpha > 0) by eigendecomposition.
/// H must be Hermitian; the decay enters only through `alpha`.
inline StateVector exact_propagate(const Eigen::MatrixXcd& h, const StateVector& psi0, double t,
                                   double alpha = 0.0) {
  if (h.rows() != h.cols() || static_cast<std::size_t>(h.rows()) != psi0.dim()) {
    throw ModelError("exact_propagate: matrix and state dimensions differ");
  }
  if (static_cast<std::size_t>(h.rows()) > (std::size_t{1} << kMaxDenseQubits)) {
    throw ModelError("exact_propagate: dimension exceeds 2^12");
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ModelError("exact_propagate: matrix is not Hermitian; pass the decay through alpha");
  }
  if (alpha < 0.0) throw ModelError("exact_propagate: alpha must be >= 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw NumericError("exact_propagate: eigensolver failed");
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(psi0.amplitudes().data(), psi0.dim());
  Eigen::VectorXcd c = es.eigenvectors().adjoint() * v;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(std::exp(-alpha * t), -es.eigenvalues()(k) * t);
  const Eigen::VectorXcd out = es.eigenvectors() * c;
  return StateVector(psi0.n_qubits(), std::vector<Complex>(out.data(), out.data() + out.size()));
}

/// Lowest eigenpair of a dense Hermitian matrix.
struct GroundPair {
  double energy;
  Eigen::VectorXcd vector;
};

inline GroundPair dense_ground(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw NumericError("dense_ground: eigensolver failed");
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

/// |<a|b>|^2 / (|a|^2 |b|^2).
inline double normalized_overlap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

}  // namespace stabfield::oracle
