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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qprog/error.hpp"
#include "qprog/matrixcore.hpp"
#include "qprog/parallel.hpp"

namespace qprog {
namespace {

using testing::Mat;
constexpr double kPi = std::numbers::pi;

DenseMatrix ket_bra(int d, int i) {
  DenseMatrix m = DenseMatrix::Zero(d, d);
  m(i, i) = 1.0;
  return m;
}

TEST(Haar, DimensionOneIsUnitModulus) {
  const DenseMatrix u = haar_unitary(1, 3);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-12);
}

TEST(Haar, SeededAndUnitary) {
  EXPECT_TRUE(haar_unitary(8, 42).isApprox(haar_unitary(8, 42), 0.0));
  EXPECT_FALSE(haar_unitary(8, 42).isApprox(haar_unitary(8, 43)));
  for (int d : {2, 3, 4, 16}) EXPECT_TRUE(is_unitary(haar_unitary(d, 9)));
}

// E|Tr U|^2 = 1 and E|Tr U|^4 = 2 for U(2).
TEST(Haar, TraceMoments) {
  const int samples = 100000;
  double m2 = 0.0, m4 = 0.0, v2 = 0.0, v4 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = std::norm(haar_unitary(2, sub_seed(77, i)).trace());
    m2 += t;
    m4 += t * t;
    v2 += t * t;
    v4 += t * t * t * t;
  }
  m2 /= samples;
  m4 /= samples;
  const double se2 = std::sqrt((v2 / samples - m2 * m2) / samples);
  const double se4 = std::sqrt((v4 / samples - m4 * m4) / samples);
  EXPECT_LE(std::abs(m2 - 1.0), 3 * se2);
  EXPECT_LE(std::abs(m4 - 2.0), 3 * se4);
}

TEST(TraceDistance, KnownPairs) {
  const DenseMatrix z0 = ket_bra(2, 0);
  EXPECT_NEAR(trace_distance(z0, z0), 0.0, 1e-14);
  EXPECT_NEAR(trace_distance(z0, ket_bra(2, 1)), 1.0, 1e-14);
  EXPECT_NEAR(trace_distance(z0, DenseMatrix::Identity(2, 2) / 2.0), 0.5, 1e-14);
}

TEST(TraceDistance, RejectsNonHermitian) {
  DenseMatrix a = ket_bra(2, 0);
  a(0, 1) = 1.0;
  EXPECT_THROW(trace_distance(a, ket_bra(2, 0)), Error);
}

TEST(Diamond, IdentityAndPhase) {
  const DenseMatrix u = haar_unitary(4, 1);
  EXPECT_NEAR(diamond_distance_unitary(u, u), 0.0, 1e-7);
  const DenseMatrix i2 = DenseMatrix::Identity(2, 2);
  EXPECT_NEAR(diamond_distance_unitary(i2, std::polar(1.0, 0.7) * i2), 0.0, 1e-7);
  EXPECT_NEAR(diamond_distance_unitary(i2, pauli_matrix(PauliAxis::Z)), 2.0, 1e-12);
}

TEST(Diamond, SingleQubitRotationClosedForm) {
  // exp(i t Z) against I: eigenvalues e^{+-it}, so the distance is 2 sin(t).
  for (double t : {0.1, 0.5, 1.0, 1.4}) {
    const DenseMatrix r = pauli_rotation(PauliAxis::Z, std::vector<int>{0}, t, 1);
    EXPECT_NEAR(diamond_distance_unitary(DenseMatrix::Identity(2, 2), r), 2 * std::sin(t), 1e-10);
  }
}

TEST(Diamond, SandwichWithPhaseOptimizedNorm) {
  for (int d : {2, 4}) {
    for (int i = 0; i < 1000; ++i) {
      const DenseMatrix u = haar_unitary(d, sub_seed(d, 2 * i));
      const DenseMatrix v = haar_unitary(d, sub_seed(d, 2 * i + 1));
      const double dd = diamond_distance_unitary(u, v);
      const double po = phase_optimized_distance(u, v);
      EXPECT_LE(po, dd + 1e-8);
      EXPECT_LE(dd, 2 * po + 1e-8);
    }
  }
}

// Output trace distance of (U (x) I)|psi> against (V (x) I)|psi>, for random
// entangled inputs, never exceeds the diamond distance (norm convention [0,2]).
TEST(Diamond, RandomizedInputsStayBelow) {
  std::mt19937_64 rng(5);
  const int d = 2;
  const DenseMatrix u = haar_unitary(d, 11);
  const DenseMatrix v = haar_unitary(d, 12);
  const double dd = diamond_distance_unitary(u, v);
  const DenseMatrix ui = kron(u, DenseMatrix::Identity(d, d));
  const DenseMatrix vi = kron(v, DenseMatrix::Identity(d, d));
  double best = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const StateVector psi = testing::random_state(d * d, rng);
    const double td = trace_distance(density_of(ui * psi), density_of(vi * psi));
    best = std::max(best, 2 * td);
  }
  EXPECT_LE(best, dd + 1e-8);
  EXPECT_GE(best, 0.9 * dd);
}

TEST(Entropy, MatchesReferenceAndUnits) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Mat rho = testing::random_density(4, 1 + i % 4, rng);
    EXPECT_NEAR(von_neumann_entropy(rho), testing::entropy_nats(rho), 1e-10);
  }
  EXPECT_NEAR(von_neumann_entropy(DenseMatrix::Identity(2, 2) / 2.0), std::log(2.0), 1e-14);
}

TEST(Holevo, ClassicalBitAndIdenticalStates) {
  const Ensemble bit(Ensemble::Kind::states, {{0.5, ket_bra(2, 0)}, {0.5, ket_bra(2, 1)}});
  EXPECT_NEAR(holevo_information(bit), std::log(2.0), 1e-12);
  std::mt19937_64 rng(2);
  const Mat rho = testing::random_density(2, 2, rng);
  const Ensemble same(Ensemble::Kind::states, {{0.3, rho}, {0.7, rho}});
  EXPECT_NEAR(holevo_information(same), 0.0, 1e-12);
}

TEST(Holevo, RejectsBadWeights) {
  EXPECT_THROW(Ensemble(Ensemble::Kind::states, {{0.4, ket_bra(2, 0)}, {0.4, ket_bra(2, 1)}}),
               Error);
}

TEST(Holevo, DimensionBoundAndDataProcessing) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  for (int e = 0; e < 100; ++e) {
    std::vector<Ensemble::Member> members;
    std::vector<double> w(4);
    double total = 0.0;
    for (double& x : w) total += (x = unif(rng));
    for (int j = 0; j < 4; ++j) {
      members.push_back({w[static_cast<std::size_t>(j)] / total,
                         density_of(testing::random_state(2, rng))});
    }
    const Ensemble ens(Ensemble::Kind::states, members);
    const double chi = holevo_information(ens);
    EXPECT_GE(chi, -1e-9);
    EXPECT_LE(chi, std::log(2.0) + 1e-9);

    const DenseMatrix u = haar_unitary(2, sub_seed(99, e));
    std::vector<Ensemble::Member> mapped;
    for (const auto& m : ens.members()) {
      mapped.push_back({m.weight, apply_channel_depolarizing(m.matrix, u, 0.6)});
    }
    EXPECT_LE(holevo_information(Ensemble(Ensemble::Kind::states, mapped)), chi + 1e-9);
  }
}

TEST(Afw, KnownValues) {
  const DenseMatrix z0 = ket_bra(2, 0);
  EXPECT_NEAR(afw_slack(z0, z0, 2), std::log(2.0), 1e-12);
  EXPECT_NEAR(afw_slack(z0, DenseMatrix::Identity(2, 2) / 2.0, 2), 0.5 * std::log(2.0), 1e-12);
}

TEST(Afw, RandomQubitPairsNonNegative) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Mat a = testing::random_density(2, 1 + i % 2, rng);
    const Mat b = testing::random_density(2, 1 + (i / 2) % 2, rng);
    EXPECT_GE(afw_slack(a, b, 2), 0.0);
  }
}

TEST(Pauli, RotationClosedForms) {
  const std::vector<int> q0{0};
  EXPECT_TRUE(pauli_rotation(PauliAxis::Z, q0, 0.0, 1).isApprox(DenseMatrix::Identity(2, 2)));
  const DenseMatrix iz = Complex(0, 1) * pauli_matrix(PauliAxis::Z);
  EXPECT_LE((pauli_rotation(PauliAxis::Z, q0, kPi / 2, 1) - iz).norm(), 1e-15);
  const std::vector<int> s{0, 2};
  const DenseMatrix r = pauli_rotation(PauliAxis::X, s, kPi, 3);
  EXPECT_LE((r + DenseMatrix::Identity(8, 8)).norm(), 1e-12);
}

TEST(Pauli, RotationMatchesSeries) {
  for (PauliAxis a : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    const std::vector<int> s{1, 2};
    const DenseMatrix p = pauli_string_matrix(a, s, 3);
    for (double t : {0.3, 1.7, kPi}) {
      EXPECT_LE((pauli_rotation(a, s, t, 3) - testing::exp_series(p, t)).norm(), 1e-12);
    }
  }
}

TEST(Pauli, AxisRoundTrip) {
  for (PauliAxis a : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    EXPECT_EQ(pauli_axis_from_char(to_char(a)), a);
  }
  EXPECT_THROW(pauli_axis_from_char('Q'), Error);
}

TEST(Embedding, MatchesEntrywiseOracle) {
  const int n = 4;
  for (const std::vector<int>& s : std::vector<std::vector<int>>{{2}, {0, 3}, {3, 1}, {2, 0, 1}}) {
    const DenseMatrix g = haar_unitary(1 << s.size(), 21);
    EXPECT_LE((embed_gate(g, s, n) - testing::embed_entrywise(g, s, n)).norm(), 1e-12);
    DenseMatrix target = haar_unitary(1 << n, 22);
    const DenseMatrix expected = testing::embed_entrywise(g, s, n) * target;
    apply_gate_left(target, g, s, n);
    EXPECT_LE((target - expected).norm(), 1e-12);
  }
}

TEST(Embedding, KronOrderIsMsbFirst) {
  const DenseMatrix x = pauli_matrix(PauliAxis::X);
  const DenseMatrix e = embed_gate(x, std::vector<int>{0}, 2);
  EXPECT_LE((e - kron(x, DenseMatrix::Identity(2, 2))).norm(), 1e-15);
}

TEST(Depolarizing, Endpoints) {
  std::mt19937_64 rng(6);
  const Mat rho = testing::random_density(2, 2, rng);
  const DenseMatrix u = haar_unitary(2, 7);
  EXPECT_LE((apply_channel_depolarizing(rho, u, 1.0) - u * rho * u.adjoint()).norm(), 1e-14);
  EXPECT_LE((apply_channel_depolarizing(rho, u, 0.0) - DenseMatrix::Identity(2, 2) / 2.0).norm(),
            1e-14);
  EXPECT_THROW(apply_channel_depolarizing(rho, u, 1.5), Error);
}

TEST(Choi, IdentityChannelConvention) {
  const int d = 2;
  const DenseMatrix c = choi_of([](const DenseMatrix& r) { return r; }, d);
  StateVector phi = StateVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  EXPECT_LE((c - d * phi * phi.adjoint()).norm(), 1e-14);
  EXPECT_NEAR(c.trace().real(), d, 1e-14);
  const DenseMatrix u = haar_unitary(2, 8);
  const DenseMatrix cu = choi_of([&](const DenseMatrix& r) { return DenseMatrix(u * r * u.adjoint()); }, d);
  EXPECT_LE((cu - choi_of_unitary(u)).norm(), 1e-13);
}

TEST(Validation, NonUnitaryRejected) {
  DenseMatrix a = DenseMatrix::Identity(2, 2);
  a(0, 0) = 2.0;
  EXPECT_FALSE(is_unitary(a));
  EXPECT_THROW(diamond_distance_unitary(a, a), Error);
}

}  // namespace
}  // namespace qprog
