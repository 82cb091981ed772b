// Copyright 2026 The qprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qprog/bounds.hpp"
#include "qprog/error.hpp"
#include "qprog/parallel.hpp"
#include "qprog/processor.hpp"

namespace qprog {
namespace {

std::vector<DenseMatrix> haar_set(int count, std::uint64_t seed) {
  std::vector<DenseMatrix> out;
  for (int i = 0; i < count; ++i) out.push_back(haar_unitary(2, sub_seed(seed, i)));
  return out;
}

TEST(QubitDistance, MatchesGeneralFormula) {
  for (int i = 0; i < 2000; ++i) {
    const DenseMatrix u = haar_unitary(2, sub_seed(1, 2 * i));
    const DenseMatrix v = haar_unitary(2, sub_seed(1, 2 * i + 1));
    EXPECT_NEAR(qubit_diamond_distance(u, v), diamond_distance_unitary(u, v), 1e-9);
  }
  const DenseMatrix i2 = DenseMatrix::Identity(2, 2);
  EXPECT_NEAR(qubit_diamond_distance(i2, pauli_matrix(PauliAxis::Y)), 2.0, 1e-12);
}

TEST(GridNet, UnitRadius) {
  const EpsilonNet net = build_net_u2(1.0);
  EXPECT_TRUE(net.certified());
  EXPECT_LE(net.log2_size(), covering_log2_unitary(2, 1.0));
  EXPECT_LE(net.size(), 1000u);
  EXPECT_EQ(net.size(), 2 * net.grid_alpha_steps() +
                            (net.grid_beta_steps() - 1) * net.grid_alpha_steps() * net.grid_alpha_steps());
  const auto [t, gap] = net.nearest(DenseMatrix::Identity(2, 2));
  EXPECT_EQ(t, 0u);
  EXPECT_NEAR(gap, 0.0, 1e-7);
  EXPECT_LE(net.certificate().max_observed_gap, 1.0);
}

TEST(GridNet, CoverageAudit) {
  for (double eps : {1.0, 0.5, 0.2}) {
    const EpsilonNet net = build_net_u2(eps, 0);
    EXPECT_LE(audit_coverage(net, haar_set(10000, 77)), eps) << eps;
  }
}

TEST(GridNet, ElementsAreTheirOwnNearest) {
  const EpsilonNet net = build_net_u2(0.2, 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t t = rng() % net.size();
    const DenseMatrix e = net.element(t);
    EXPECT_TRUE(is_unitary(e));
    auto [idx, gap] = program_state_for(e, net);
    EXPECT_NEAR(gap, 0.0, 1e-6);
    EXPECT_NEAR(qubit_diamond_distance(net.element(idx), e), 0.0, 1e-6);
    auto [idx2, gap2] = net.nearest(std::polar(1.0, 1.234) * e);
    EXPECT_EQ(idx2, idx);
    EXPECT_NEAR(gap2, 0.0, 1e-6);
  }
  EXPECT_THROW(net.element(net.size()), Error);
}

TEST(GridNet, NearestIsNoWorseThanScan) {
  const EpsilonNet net = build_net_u2(1.0, 0);
  for (const DenseMatrix& u : haar_set(200, 5)) {
    double best = 10.0;
    for (std::uint64_t t = 0; t < net.size(); ++t) {
      best = std::min(best, qubit_diamond_distance(net.element(t), u));
    }
    EXPECT_NEAR(net.nearest(u).second, best, 1e-9);
  }
}

TEST(SampledNet, BudgetBehaviour) {
  const auto audit = haar_set(256, 99);
  EXPECT_GT(audit_coverage(build_net_sampled(1, 0.5, 1, 4), audit), 1.8);
  double prev = 3.0;
  for (long long budget : {1, 4, 16, 64, 256}) {
    const EpsilonNet net = build_net_sampled(1, 0.5, budget, 4);
    EXPECT_FALSE(net.certified());
    const double gap = audit_coverage(net, audit);
    EXPECT_LE(gap, prev);
    prev = gap;
  }
  const EpsilonNet net = build_net_sampled(2, 0.5, 32, 6);
  std::vector<DenseMatrix> own;
  for (std::uint64_t t = 0; t < net.size(); ++t) own.push_back(net.element(t));
  EXPECT_NEAR(audit_coverage(net, own), 0.0, 1e-6);
}

TEST(Processor, PureAndMixedPrograms) {
  const EpsilonNet net = build_net_u2(0.5, 0);
  std::mt19937_64 rng(8);
  const DenseMatrix rho = testing::random_density(2, 2, rng);
  EXPECT_LE((apply_processor(rho, 0, net) - rho).norm(), 1e-14);
  const DenseMatrix u7 = net.element(7);
  EXPECT_LE((apply_processor(rho, 7, net) - u7 * rho * u7.adjoint()).norm(), 1e-14);
  const std::vector<std::pair<std::uint64_t, double>> prog{{3, 0.2}, {11, 0.5}, {40, 0.3}};
  DenseMatrix expected = DenseMatrix::Zero(2, 2);
  for (auto [t, p] : prog) expected += p * net.element(t) * rho * net.element(t).adjoint();
  EXPECT_LE((apply_processor_mixed(rho, prog, net) - expected).norm(), 1e-14);
}

TEST(Supports, CountsOnSmallGraphs) {
  EXPECT_EQ(valid_supports(ConnectivityGraph::line(4), 2).size(), 6u);
  EXPECT_EQ(valid_supports(ConnectivityGraph::line(4), 1).size(), 4u);
  EXPECT_EQ(valid_supports(ConnectivityGraph::complete(4), 3).size(), 24u);
  // Connected triples on a line of four are {0,1,2} and {1,2,3}, six orders each.
  EXPECT_EQ(valid_supports(ConnectivityGraph::line(4), 3).size(), 12u);
}

TEST(Program, SingleGate) {
  const BrickworkCircuit c = random_brickwork(1, 1, 1, Geometry::line, 2);
  const ProgrammedCircuit p = program_circuit(c, 0.3);
  EXPECT_EQ(p.program.gates.size(), 1u);
  EXPECT_LE(p.achieved_error, 0.3);
  EXPECT_NEAR(p.per_gate_eps, 0.3, 1e-15);
}

TEST(Program, IdentityCircuitIsExact) {
  std::vector<GateSlot> slots;
  for (int q = 0; q < 3; ++q) slots.push_back({{q}, DenseGate{DenseMatrix::Identity(2, 2)}, 0});
  const BrickworkCircuit c(ConnectivityGraph::line(3), 1, 1, slots);
  EXPECT_NEAR(program_circuit(c, 0.5).achieved_error, 0.0, 1e-7);
}

TEST(Program, RandomCircuitWithinBudget) {
  const BrickworkCircuit c = random_brickwork(6, 4, 1, Geometry::line, 21);
  const ProgrammedCircuit p = program_circuit(c, 0.5);
  const double ell = static_cast<double>(c.num_gates());
  EXPECT_LE(p.achieved_error, 0.5);
  EXPECT_LE(p.achieved_error, p.gap_sum + 1e-9);
  EXPECT_GE(p.total_cost_bits, ell * p.net->log2_size());
  EXPECT_LE(ell * p.net->log2_size(), ell * 8 * std::log2(12 * ell / 0.5));
  EXPECT_LE(p.total_cost_bits, covering_log2_brickwork(6, 1, c.num_gates(), 0.5));
}

TEST(Program, LocationsDecode) {
  const BrickworkCircuit c = random_brickwork(5, 3, 2, Geometry::line, 4);
  const EpsilonNet sampled = build_net_sampled(2, 0.5, 8, 1, 8);
  // k = 2 has no certified net, so only the location code is exercised here.
  EXPECT_THROW(program_circuit(c, 0.5, std::make_shared<EpsilonNet>(sampled)), Error);
  const BrickworkCircuit c1 = random_brickwork(5, 3, 1, Geometry::line, 4);
  const ProgrammedCircuit p = program_circuit(c1, 0.5);
  ASSERT_EQ(p.program.gates.size(), c1.num_gates());
  EXPECT_GE(std::exp2(p.program.location_bits),
            static_cast<double>(p.program.support_count) * c1.depth());
  for (std::size_t i = 0; i < c1.num_gates(); ++i) {
    auto [layer, support] = decode_location(c1.graph(), 1, p.program, p.program.gates[i].location);
    EXPECT_EQ(layer, c1.slots()[i].layer);
    EXPECT_EQ(support, c1.slots()[i].support);
  }
}

TEST(Program, ErrorShrinksWithEpsilon) {
  const BrickworkCircuit c = random_brickwork(4, 3, 1, Geometry::line, 8);
  double prev = INFINITY;
  for (double eps : {1.0, 0.5, 0.25, 0.125, 0.0625}) {
    const double e = program_circuit(c, eps).achieved_error;
    EXPECT_LE(e, eps);
    EXPECT_LE(e, prev + 1e-12);
    prev = e;
  }
}

TEST(Program, Preconditions) {
  const BrickworkCircuit c = random_brickwork(3, 2, 1, Geometry::line, 8);
  try {
    program_circuit(c, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidEpsilon);
  }
  const BrickworkCircuit c2 = random_brickwork(3, 2, 2, Geometry::line, 8);
  try {
    program_circuit(c2, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoCertifiedNet);
  }
}

TEST(Propagation, Basics) {
  const BrickworkCircuit c = random_brickwork(4, 3, 2, Geometry::line, 10);
  EXPECT_EQ(verify_error_propagation(c, 0.0, 3, 1), 0.0);
  const BrickworkCircuit one = random_brickwork(2, 1, 2, Geometry::line, 10);
  EXPECT_NEAR(verify_error_propagation(one, 0.1, 5, 1), 1.0, 1e-9);
  EXPECT_LE(verify_error_propagation(c, 0.01, 20, 2), 1.0 + 1e-9);
  EXPECT_LE(verify_error_propagation(random_brickwork(6, 4, 1, Geometry::line, 3), 0.05, 20, 3),
            1.0 + 1e-9);
}

}  // namespace
}  // namespace qprog
