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

#include "stabfield/code_builder.hpp"

#include <cmath>
#include <filesystem>
#include <map>

#include "gtest/gtest.h"

#include "stabfield/geometries.hpp"
#include "stabfield/model_io.hpp"
#include "test_util.hpp"

using namespace stabfield;

namespace {

std::vector<std::string> strs(const StabilizerModel& m) {
  std::vector<std::string> out;
  for (const auto& g : m.generators()) out.push_back(g.str());
  return out;
}

double binomial(int n, int k) { return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0)); }

const std::filesystem::path kModels = STABFIELD_MODELS_DIR;

const std::vector<std::string> kShipped = {"cluster_n2", "cluster_n4", "cluster_n5", "cluster_n6", "cluster_n8",
                                           "cluster_n9", "surface_n2", "surface_n5", "surface_n6", "surface_n8"};

}  // namespace

TEST(code_builder, cluster_two_chain) {
  const auto m = cluster_stabilizers(QubitGraph::chain(2));
  EXPECT_EQ(strs(m), (std::vector<std::string>{"+XZ", "+ZX"}));
}

TEST(code_builder, cluster_ring_vertex_one) {
  const auto m = geometries::cluster_ring(4);
  EXPECT_EQ(m.generators().front().str(), "+XZIZ");
}

TEST(code_builder, cluster_single_vertex) {
  const auto m = cluster_stabilizers(QubitGraph{1, {}});
  EXPECT_EQ(strs(m), (std::vector<std::string>{"+X"}));
}

TEST(code_builder, disconnected_graph_warns_but_builds) {
  EXPECT_NO_THROW(cluster_stabilizers(QubitGraph{3, {{1, 2}}}));
}

TEST(code_builder, graph_validation) {
  EXPECT_THROW(cluster_stabilizers(QubitGraph{2, {{1, 3}}}), ModelError);
  EXPECT_THROW(cluster_stabilizers(QubitGraph{2, {{1, 1}}}), ModelError);
  EXPECT_THROW(cluster_stabilizers(QubitGraph{2, {{1, 2}, {2, 1}}}), ModelError);
  EXPECT_THROW(cluster_stabilizers(QubitGraph{0, {}}), ModelError);
}

TEST(code_builder, surface_five_qubit_generators) {
  const auto m = geometries::surface_n5();
  EXPECT_EQ(strs(m), (std::vector<std::string>{"+XIXXI", "+IXXIX", "+ZZZII", "+IIZZZ"}));
}

TEST(code_builder, surface_minimal_code) {
  SurfaceLayout l{2, {{{1, 2}}}, {{{1, 2}}}};
  EXPECT_EQ(strs(surface_stabilizers(l)), (std::vector<std::string>{"+XX", "+ZZ"}));
  EXPECT_EQ(strs(geometries::surface_n2()), (std::vector<std::string>{"-XX", "-ZZ"}));
}

TEST(code_builder, surface_rejects_anticommuting_checks) {
  // X1X2 vs Z1Z3 overlap only on qubit 1.
  const Eigen::MatrixXcd a = stabfield::testing::kron_letters("XXI"), b = stabfield::testing::kron_letters("ZIZ");
  ASSERT_GT((a * b - b * a).norm(), 1.0);
  SurfaceLayout l{3, {{{1, 2}}}, {{{1, 3}}}};
  try {
    surface_stabilizers(l);
    FAIL() << "expected rejection";
  } catch (const ModelError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("x_check 0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("z_check 0"), std::string::npos) << msg;
  }
  EXPECT_THROW(surface_stabilizers(SurfaceLayout{3, {{{1, 4}}}, {}}), ModelError);
}

TEST(code_builder, hamiltonian_carries_minus_delta) {
  const auto h = hamiltonian(geometries::cluster_chain(2, 1.5));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h.terms()[0].coefficient(), -1.5);
  // Signed check: -Delta * (-XX) = +Delta XX
  EXPECT_DOUBLE_EQ(hamiltonian(geometries::surface_n2()).terms()[0].coefficient(), 1.0);
}

TEST(code_builder, hamiltonian_eigenvalues) {
  auto ev = hermitian_eigenvalues(to_dense(hamiltonian(geometries::cluster_chain(2))));
  const std::vector<double> expect = {-2, 0, 0, 2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expect[i], 1e-12);

  ev = hermitian_eigenvalues(to_dense(hamiltonian(geometries::surface_n5())));
  EXPECT_NEAR(ev.front(), -4.0, 1e-12);

  ev = hermitian_eigenvalues(to_dense(hamiltonian(geometries::cluster_ring(4))));
  EXPECT_NEAR(ev.front(), -4.0, 1e-12);
  EXPECT_NEAR(ev.back(), 4.0, 1e-12);
}

TEST(code_builder, hamiltonian_matrix_free_matches_dense) {
  std::mt19937_64 gen(3);
  for (const auto& m : {geometries::cluster_grid(2, 3), geometries::surface_n8(), geometries::surface_n6()}) {
    const auto h = hamiltonian(m);
    const auto dense = to_dense(h);
    for (int k = 0; k < 5; ++k) {
      const auto psi = stabfield::testing::random_state(m.n_qubits(), gen);
      const Eigen::VectorXcd expect = dense * stabfield::testing::to_eigen(psi);
      EXPECT_LE((stabfield::testing::to_eigen(apply(h, psi)) - expect).norm(), 1e-12 * expect.norm());
    }
  }
}

TEST(code_builder, cluster_two_ground_state) {
  // (|0>|+> + |1>|->)/sqrt2 = (|00> + |01> + |10> - |11>)/2
  StateVector expect(2, {0.5, 0.5, 0.5, -0.5});
  const auto psi = ground_state(geometries::cluster_chain(2));
  EXPECT_GE(overlap_squared(expect, psi), 1.0 - 1e-12);
}

TEST(code_builder, surface_two_ground_state_is_singlet) {
  const double r = 1.0 / std::sqrt(2.0);
  StateVector singlet(2, {0.0, r, -r, 0.0});
  const auto psi = ground_state(geometries::surface_n2());
  EXPECT_GE(overlap_squared(singlet, psi), 1.0 - 1e-12);
}

TEST(code_builder, ground_energy_is_dense_minimum) {
  for (const auto& name : kShipped) {
    const auto m = load_model(kModels / (name + ".json"));
    const auto ev = hermitian_eigenvalues(to_dense(hamiltonian(m)));
    EXPECT_NEAR(ground_energy(m), ev.front(), 1e-10) << name;
  }
}

TEST(code_builder, ground_state_is_stabilized) {
  for (const auto& name : kShipped) {
    const auto m = load_model(kModels / (name + ".json"));
    const auto psi = ground_state(m);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    for (const auto& k : m.generators()) EXPECT_LE(distance(apply_pauli(k, psi), psi), 1e-10) << name << k.str();
    for (const auto& l : m.logicals()) EXPECT_LE(distance(apply_pauli(l, psi), psi), 1e-10) << name << l.str();
  }
}

// Trace of the product of projectors (I+K)/2 is the dimension of the joint
// +1 eigenspace; with logicals included it must be exactly one.
TEST(code_builder, reference_state_is_unique) {
  for (const auto& name : kShipped) {
    const auto m = load_model(kModels / (name + ".json"));
    const auto dim = std::size_t{1} << m.n_qubits();
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
    auto ops = m.generators();
    ops.insert(ops.end(), m.logicals().begin(), m.logicals().end());
    for (const auto& k : ops) {
      proj = proj * 0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + to_dense(OperatorSum(m.n_qubits(), {k})));
    }
    EXPECT_NEAR(proj.trace().real(), 1.0, 1e-9) << name;
  }
}

TEST(code_builder, ground_state_is_deterministic) {
  const auto a = ground_state(geometries::surface_n8());
  const auto b = ground_state(geometries::surface_n8());
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
}

TEST(code_builder, cluster_spectrum_ladder) {
  // Brute-force dense levels versus -(N - 2n) Delta with multiplicity C(N, n).
  for (const auto& m : {geometries::cluster_chain(2), geometries::cluster_ring(4), geometries::cluster_chain(5),
                        geometries::cluster_chain(6), geometries::cluster_grid(3, 3)}) {
    const int n = static_cast<int>(m.n_qubits());
    const auto levels = spectrum(m);
    ASSERT_EQ(levels.size(), static_cast<std::size_t>(n + 1)) << m.name();
    for (int k = 0; k <= n; ++k) {
      EXPECT_NEAR(levels[k].energy, -(n - 2.0 * k), 1e-8) << m.name();
      EXPECT_EQ(static_cast<double>(levels[k].multiplicity), binomial(n, k)) << m.name();
    }
  }
}

TEST(code_builder, ring_four_levels) {
  // Contains -4, -2, +2, +4; brute force gives four states at -2 (not two).
  const auto levels = spectrum(geometries::cluster_ring(4));
  std::map<long, std::size_t> by_energy;
  for (const auto& l : levels) by_energy[std::lround(l.energy)] = l.multiplicity;
  EXPECT_EQ(by_energy.at(-4), 1u);
  EXPECT_EQ(by_energy.at(-2), 4u);
  EXPECT_EQ(by_energy.at(2), 4u);
  EXPECT_EQ(by_energy.at(4), 1u);
}

TEST(code_builder, surface_five_levels) {
  const auto levels = spectrum(geometries::surface_n5());
  ASSERT_EQ(levels.size(), 5u);
  const std::vector<double> e = {-4, -2, 0, 2, 4};
  const std::vector<std::size_t> mult = {2, 8, 12, 8, 2};
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(levels[k].energy, e[k], 1e-8);
    EXPECT_EQ(levels[k].multiplicity, mult[k]);
  }
}

TEST(code_builder, spectrum_scales_with_gap) {
  const auto levels = spectrum(geometries::cluster_chain(3, 2.5));
  EXPECT_NEAR(levels.front().energy, -7.5, 1e-10);
  EXPECT_NEAR(levels.back().energy, 7.5, 1e-10);
}

TEST(code_builder, model_validation) {
  EXPECT_THROW(StabilizerModel(2, {PauliString::from_letters("XI"), PauliString::from_letters("ZI")}, 1.0),
               ModelError);
  EXPECT_THROW(StabilizerModel(2, {PauliString::from_letters("XX")}, 0.0), ModelError);
  EXPECT_THROW(StabilizerModel(2, {PauliString::from_letters("XXX")}, 1.0), ModelError);
  EXPECT_THROW(StabilizerModel(1, {PauliString::from_letters("X", 2.0)}, 1.0), ModelError);
}

TEST(model_io, shipped_files_match_builtins) {
  const std::map<std::string, StabilizerModel> builtin = {
      {"cluster_n2", geometries::cluster_chain(2)}, {"cluster_n4", geometries::cluster_ring(4)},
      {"cluster_n5", geometries::cluster_chain(5)}, {"cluster_n6", geometries::cluster_chain(6)},
      {"cluster_n8", geometries::cluster_chain(8)}, {"cluster_n9", geometries::cluster_grid(3, 3)},
      {"surface_n2", geometries::surface_n2()},     {"surface_n5", geometries::surface_n5()},
      {"surface_n6", geometries::surface_n6()},     {"surface_n8", geometries::surface_n8()}};
  for (const auto& [name, m] : builtin) {
    const auto loaded = load_model(kModels / (name + ".json"));
    EXPECT_EQ(loaded.name(), name);
    EXPECT_EQ(loaded.generators(), m.generators()) << name;
    EXPECT_EQ(loaded.logicals(), m.logicals()) << name;
  }
}

TEST(model_io, errors_name_the_field) {
  auto expect_msg = [](const nlohmann::json& j, const std::string& needle) {
    try {
      model_from_json(j);
      FAIL() << "expected ConfigError for " << j.dump();
    } catch (const ConfigError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_msg({{"n_qubits", 2}}, "kind");
  expect_msg({{"kind", "torus"}, {"n_qubits", 2}}, "kind");
  expect_msg({{"kind", "cluster"}, {"n_qubits", "two"}}, "n_qubits");
  expect_msg({{"kind", "cluster"}, {"n_qubits", 2}}, "edges");
  expect_msg({{"kind", "surface"}, {"n_qubits", 3}, {"x_checks", {{1, 2}}}, {"z_checks", {{1, 3}}}}, "anticommutes");
  expect_msg({{"kind", "surface"}, {"n_qubits", 2}, {"x_checks", {{1, 2}}}, {"z_checks", {{1, 2}}},
              {"x_signs", {-1, 1}}},
             "x_signs");
}
