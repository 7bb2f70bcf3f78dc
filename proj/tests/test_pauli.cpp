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

#include "stabfield/pauli.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace stabfield;
using stabfield::testing::kron_letters;
using stabfield::testing::random_letters;
using stabfield::testing::random_state;

TEST(pauli, letters_round_trip) {
  auto p = PauliString::from_letters("XZIY");
  EXPECT_EQ(p.str(), "+XZIY");
  EXPECT_EQ(p.letter(1), Pauli::X);
  EXPECT_EQ(p.letter(4), Pauli::Y);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(PauliString::from_letters("-ZZ").str(), "-ZZ");
  EXPECT_EQ(PauliString::from_letters("X_Z").str(), "+XIZ");
  EXPECT_THROW(PauliString::from_letters("XQ"), ModelError);
  EXPECT_THROW(p.letter(5), ModelError);
  EXPECT_THROW(PauliString(0), ModelError);
}

TEST(pauli, qubit_one_is_most_significant) {
  auto p = PauliString::from_letters("XI");
  EXPECT_EQ(p.x_mask(), 0b10u);
  auto out = apply_pauli(p, StateVector::basis(2, 0b00));
  EXPECT_EQ(out[0b10], Complex(1.0));
}

TEST(pauli, x_flips_zero_to_one) {
  auto out = apply_pauli(PauliString::from_letters("X"), StateVector::basis(1, 0));
  EXPECT_EQ(out[0], Complex(0.0));
  EXPECT_EQ(out[1], Complex(1.0));
}

TEST(pauli, z_flips_phase_of_plus) {
  const double r = 1.0 / std::sqrt(2.0);
  StateVector plus(1, {r, r});
  auto out = apply_pauli(PauliString::from_letters("Z"), plus);
  EXPECT_DOUBLE_EQ(out[0].real(), r);
  EXPECT_DOUBLE_EQ(out[1].real(), -r);
}

TEST(pauli, x1z2_matches_dense_product) {
  // Oracle: (X kron Z) as explicit 4x4 matrix.
  const auto dense = kron_letters("XZ");
  const auto p = PauliString::from_letters("XZ");
  // |00> -> +|10>
  auto a = apply_pauli(p, StateVector::basis(2, 0b00));
  EXPECT_EQ(a[0b10], Complex(1.0));
  EXPECT_EQ(dense(0b10, 0b00), Complex(1.0));
  // |01> -> -|11>
  auto b = apply_pauli(p, StateVector::basis(2, 0b01));
  EXPECT_EQ(b[0b11], Complex(-1.0));
  EXPECT_EQ(dense(0b11, 0b01), Complex(-1.0));
}

TEST(pauli, y_phase) {
  // Y|0> = i|1>, Y|1> = -i|0>
  auto p = PauliString::from_letters("Y");
  EXPECT_EQ(apply_pauli(p, StateVector::basis(1, 0))[1], Complex(0, 1));
  EXPECT_EQ(apply_pauli(p, StateVector::basis(1, 1))[0], Complex(0, -1));
}

TEST(pauli, dimension_mismatch_is_rejected) {
  EXPECT_THROW(apply_pauli(PauliString::from_letters("XX"), StateVector(3)), ModelError);
  OperatorSum s(2);
  EXPECT_THROW(s.add(PauliString::from_letters("X")), ModelError);
  EXPECT_THROW(commutes(PauliString::from_letters("X"), PauliString::from_letters("XX")), ModelError);
}

TEST(pauli, to_dense_single_qubit) {
  Eigen::Matrix2cd x, z;
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  EXPECT_EQ(to_dense(OperatorSum(1, {PauliString::from_letters("X")})), Eigen::MatrixXcd(x));
  EXPECT_EQ(to_dense(OperatorSum(1, {PauliString::from_letters("Z")})), Eigen::MatrixXcd(z));
  EXPECT_EQ(to_dense(OperatorSum(1)), Eigen::MatrixXcd::Zero(2, 2));
}

TEST(pauli, to_dense_refuses_large_registers) {
  EXPECT_THROW(to_dense(OperatorSum(13)), ModelError);
  EXPECT_NO_THROW(to_dense(OperatorSum(3)));
}

TEST(pauli, commutation) {
  // N=4 ring generators K1 = X1 Z2 Z4 and K2 = Z1 X2 Z3.
  const auto k1 = PauliString::from_letters("XZIZ");
  const auto k2 = PauliString::from_letters("ZXZI");
  EXPECT_TRUE(commutes(k1, k2));
  const Eigen::MatrixXcd a = kron_letters("XZIZ"), b = kron_letters("ZXZI");
  EXPECT_LT((a * b - b * a).norm(), 1e-14);

  EXPECT_FALSE(commutes(PauliString::from_letters("X"), PauliString::from_letters("Z")));
  EXPECT_TRUE(commutes(PauliString::from_letters("II"), PauliString::from_letters("XY")));
}

TEST(pauli, commutes_agrees_with_dense_commutator) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto la = random_letters(n, gen), lb = random_letters(n, gen);
    const Eigen::MatrixXcd a = kron_letters(la), b = kron_letters(lb);
    const bool dense = (a * b - b * a).norm() < 1e-12;
    EXPECT_EQ(commutes(PauliString::from_letters(la), PauliString::from_letters(lb)), dense) << la << " " << lb;
  }
}

// Properties over random strings and states, N = 1..6.
TEST(pauli, involution_property) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto p = PauliString::from_letters(random_letters(n, gen));
    const auto psi = random_state(n, gen);
    EXPECT_LE(distance(apply_pauli(p, apply_pauli(p, psi)), psi), 1e-12);
  }
}

TEST(pauli, apply_matches_kronecker_oracle) {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto letters = random_letters(n, gen);
      const double c = coef(gen);
      const auto p = PauliString::from_letters(letters, c);
      const auto psi = random_state(n, gen);
      const Eigen::VectorXcd expect = kron_letters(letters, c) * stabfield::testing::to_eigen(psi);
      const auto got = stabfield::testing::to_eigen(apply_pauli(p, psi));
      EXPECT_LE((got - expect).norm(), 1e-12 * std::max(1.0, expect.norm()));
    }
  }
}

TEST(pauli, sum_is_linear_and_matches_dense) {
  std::mt19937_64 gen(17);
  for (std::size_t n = 1; n <= 5; ++n) {
    OperatorSum s(n);
    Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
    for (int k = 0; k < 6; ++k) {
      const auto letters = random_letters(n, gen);
      const double c = 0.25 * (k + 1);
      s.add(PauliString::from_letters(letters, c));
      oracle += kron_letters(letters, c);
    }
    EXPECT_LE((to_dense(s) - oracle).norm(), 1e-12);
    const auto psi = random_state(n, gen);
    EXPECT_LE((stabfield::testing::to_eigen(apply(s, psi)) - oracle * stabfield::testing::to_eigen(psi)).norm(),
              1e-12);
  }
}
