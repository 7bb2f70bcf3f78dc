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

#include "stabfield/oracle.hpp"

#include <random>

#include "gtest/gtest.h"

#include "stabfield/experiment.hpp"
#include "stabfield/geometries.hpp"
#include "test_util.hpp"

using namespace stabfield;
using namespace stabfield::oracle;

namespace {

TwoQubitFields draw(std::mt19937_64& gen, bool with_g) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  TwoQubitFields f;
  f.h1 = u(gen);
  f.h2 = u(gen);
  if (with_g) {
    f.g1 = u(gen);
    f.g2 = u(gen);
  }
  return f;
}

// Full two-qubit operator assembled from Pauli strings.
Eigen::MatrixXcd full(const StabilizerModel& m, const TwoQubitFields& f) {
  FieldSample s(2);
  s.g = {f.g1, f.g2};
  s.h = {f.h1, f.h2};
  OperatorSum h = hamiltonian(m);
  h.append(field_hamiltonian(s, 0.0));
  return to_dense(h);
}

Eigen::VectorXd sorted_eigs(const Eigen::MatrixXcd& h) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h).eigenvalues();
}

}  // namespace

TEST(oracle_cluster2, excitation_basis_reproduces_printed_matrix) {
  const auto m = geometries::cluster_chain(2);
  const auto u = cluster2_basis(m);
  EXPECT_LE((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  std::mt19937_64 gen(11);
  for (int k = 0; k < 100; ++k) {
    const auto f = draw(gen, true);
    const Eigen::Matrix4cd rotated = u.adjoint() * full(m, f) * u;
    EXPECT_LE((rotated - cluster2_hamiltonian(f)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(oracle_cluster2, eigenvalues) {
  const auto m = geometries::cluster_chain(2);
  std::mt19937_64 gen(12);
  for (int k = 0; k < 100; ++k) {
    const auto f = draw(gen, false);
    const auto e = cluster2_eigs(f);
    const auto printed = sorted_eigs(cluster2_hamiltonian(f));
    const auto numeric = sorted_eigs(full(m, f));
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(printed(i), e[i], 1e-10);
      EXPECT_NEAR(numeric(i), e[i], 1e-10);
    }
    const auto sq = cluster2_energy_squared(f);
    EXPECT_NEAR(sq[0], (f.q1() - f.q2()) * (f.q1() - f.q2()), 1e-10);
    EXPECT_NEAR(sq[1], (f.q1() + f.q2()) * (f.q1() + f.q2()), 1e-10);
  }
}

TEST(oracle_cluster2, ground_state_coefficients) {
  const auto m = geometries::cluster_chain(2);
  std::mt19937_64 gen(13);
  for (int k = 0; k < 100; ++k) {
    const auto f = draw(gen, false);
    const auto g = cluster2_ground(f);
    const auto ref = dense_ground(cluster2_hamiltonian(f));
    EXPECT_GE(normalized_overlap(g.normalized(), ref.vector), 1.0 - 1e-12);
    EXPECT_NEAR(ref.energy, -f.q1() - f.q2(), 1e-10);
    // Same state in the computational basis.
    const Eigen::Vector4cd comp = cluster2_basis(m) * g.normalized();
    EXPECT_GE(normalized_overlap(comp, dense_ground(full(m, f)).vector), 1.0 - 1e-12);
  }
}

TEST(oracle_cluster2, closed_form_normalizer) {
  const double d = 1.0;
  EXPECT_NEAR(cluster2_ground(TwoQubitFields{0.0, 0.0, 0, 0, d}).norm_squared(), 1.0, 1e-14);
  // Both nonzero: the true norm is ((q1+d)^2+h1^2)((q2+d)^2+h2^2).
  const TwoQubitFields f{0.7, -0.4, 0, 0, d};
  const double q1 = f.q1(), q2 = f.q2();
  const double dc = (q1 + d) * (q1 + d) * (q2 + d) * (q2 + d) + 0.49 * 0.16;
  const double truth = ((q1 + d) * (q1 + d) + 0.49) * ((q2 + d) * (q2 + d) + 0.16);
  EXPECT_NEAR(cluster2_ground(f).norm_squared(), truth / dc, 1e-13);
  EXPECT_GT(std::abs(cluster2_ground(f).norm_squared() - 1.0), 0.1);
  EXPECT_THROW(cluster2_ground({0.1, 0.1, 0.1, 0, d}), ModelError);
}

TEST(oracle_surface2, matrix_eigenvalues_and_ground) {
  const auto m = geometries::surface_n2();
  std::mt19937_64 gen(14);
  for (int k = 0; k < 100; ++k) {
    const auto fg = draw(gen, true);
    EXPECT_LE((surface2_hamiltonian(fg) - full(m, fg)).cwiseAbs().maxCoeff(), 1e-14);
    const auto f = draw(gen, false);
    const auto e = surface2_eigs(f);
    const auto numeric = sorted_eigs(full(m, f));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(numeric(i), e[i], 1e-10);
    const auto g = stabfield::testing::to_eigen(surface2_ground(f).state());
    EXPECT_NEAR(g.norm(), 1.0, 1e-14);
    const double es = -f.delta - std::sqrt(f.delta * f.delta + f.h_minus() * f.h_minus());
    EXPECT_LE((full(m, f) * g - es * g).norm(), 1e-12);
    if (es <= e[0] + 1e-9 && e[1] > es + 1e-6) {
      EXPECT_GE(normalized_overlap(g, dense_ground(full(m, f)).vector), 1.0 - 1e-12);
    }
  }
}

TEST(oracle_surface2, level_crossing_at_large_uniform_field) {
  // h1 = h2 = 1.5: the even sector drops to 1 - sqrt(10) below -2.
  const TwoQubitFields f{1.5, 1.5, 0, 0, 1.0};
  EXPECT_NEAR(surface2_eigs(f)[0], 1.0 - std::sqrt(10.0), 1e-14);
  const auto g = stabfield::testing::to_eigen(surface2_ground(f).state());
  EXPECT_LE(normalized_overlap(g, dense_ground(surface2_hamiltonian(f)).vector), 1e-12);
}

TEST(oracle_surface2, zero_field_is_singlet) {
  const auto g = surface2_ground({}).state();
  EXPECT_NEAR(g[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g[2].real(), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_GE(overlap_squared(g, ground_state(geometries::surface_n2())), 1.0 - 1e-12);
}

TEST(exact_propagate, rabi_and_decay) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  const double t = 0.8, a = 0.3;
  const auto out = exact_propagate(x, StateVector::basis(1, 0), t, a);
  EXPECT_NEAR(std::abs(out[0] - std::exp(-a * t) * std::cos(t)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(out[1] - Complex(0, -std::exp(-a * t) * std::sin(t))), 0.0, 1e-14);
}

TEST(exact_propagate, rejects_bad_input) {
  Eigen::Matrix2cd nh;
  nh << 0, 1, 0, 0;
  EXPECT_THROW(exact_propagate(nh, StateVector::basis(1, 0), 1.0), ModelError);
  EXPECT_THROW(exact_propagate(Eigen::Matrix2cd::Identity(), StateVector::basis(2, 0), 1.0), ModelError);
  EXPECT_THROW(exact_propagate(Eigen::Matrix2cd::Identity(), StateVector::basis(1, 0), 1.0, -0.1), ModelError);
}

TEST(oracle_check, all_checks_pass) {
  const auto checks = oracle_check(100, 0);
  EXPECT_GE(checks.size(), 9u);
  for (const auto& c : checks) EXPECT_TRUE(c.pass()) << c.name << " error " << c.max_error;
}
