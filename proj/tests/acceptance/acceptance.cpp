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

// Acceptance gate: runs the twelve acceptance criteria and prints one
// PASS/FAIL line each. Tolerances and pinned regression values live at the
// top of the file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qprog/bounds.hpp"
#include "qprog/circuit.hpp"
#include "qprog/lightcone.hpp"
#include "qprog/matrixcore.hpp"
#include "qprog/mosim.hpp"
#include "qprog/parallel.hpp"
#include "qprog/processor.hpp"
#include "qprog/repr.hpp"

namespace {

using namespace qprog;

constexpr double kPi = std::numbers::pi;

// Criterion 3: ratio extremes of the first run over N = 2^6 ... 2^20, and the
// allowed drift around them.
constexpr double kLowerRatioMin = -0.0024682093546116004;
constexpr double kLowerRatioMax = 0.0006508983710636927;
constexpr double kUpperRatioMin = 309.2396950985815;
constexpr double kUpperRatioMax = 658.4054931252188;
constexpr double kBracketTolerance = 0.05;

constexpr double kSigmas = 3.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Outcome schur_weyl_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  bool ok = true;
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 8; ++n) {
      BigCount sum = 0;
      for (const Partition& l : partitions(n, d)) {
        const BigCount w = weyl_dimension(l, d);
        sum += w * w;
      }
      ok = ok && sum == binomial(n + d * d - 1, d * d - 1);
      ++checked;
    }
  }
  const double s = seconds_since(t0);
  return {ok && s < 1.0, fmt("%.0f (n, d) pairs exact, %.3f s (limit 1 s)", checked, s)};
}

Outcome binomial_inequality() {
  const auto t0 = std::chrono::steady_clock::now();
  long long bad = 0;
  for (int m = 0; m <= 200; ++m) {
    for (int k = 0; k <= 200; ++k) bad += binomial_lb_holds(m, k) ? 0 : 1;
  }
  const double s = seconds_since(t0);
  return {bad == 0 && s < 5.0, fmt("201x201 grid, %.0f violations, %.3f s (limit 5 s)", bad, s)};
}

Outcome bound_scaling() {
  const auto pts = tightness_sweep(6, 20, 0.5, 256);
  bool ordered = true;
  double lo_min = INFINITY, lo_max = -INFINITY, up_min = INFINITY, up_max = -INFINITY;
  for (const auto& p : pts) {
    ordered = ordered && p.lower_bits <= p.upper_bits;
    lo_min = std::min(lo_min, p.lower_ratio);
    lo_max = std::max(lo_max, p.lower_ratio);
    up_min = std::min(up_min, p.upper_ratio);
    up_max = std::max(up_max, p.upper_ratio);
  }
  auto widen_lo = [](double v) { return v - kBracketTolerance * std::abs(v); };
  auto widen_hi = [](double v) { return v + kBracketTolerance * std::abs(v); };
  const bool lower_in = lo_min >= widen_lo(kLowerRatioMin) && lo_max <= widen_hi(kLowerRatioMax);
  const bool upper_in = up_min >= widen_lo(kUpperRatioMin) && up_max <= widen_hi(kUpperRatioMax);
  const bool lower_positive = widen_lo(kLowerRatioMin) > 0.0 && lo_min > 0.0;
  const bool upper_positive = widen_lo(kUpperRatioMin) > 0.0;
  std::ostringstream os;
  os << "ordering " << (ordered ? "holds" : "violated") << " at all " << pts.size()
     << " points; lower/(N log2^2 N) in [" << lo_min << ", " << lo_max << "]"
     << (lower_in ? " within" : " outside") << " pinned bracket"
     << (lower_positive ? "" : " (bracket not positive: the optimized lower bound is negative for"
                               " N <= 256)")
     << "; upper/(N log2^2 N) in [" << up_min << ", " << up_max << "]"
     << (upper_in ? " within" : " outside") << " pinned bracket";
  return {ordered && lower_in && upper_in && lower_positive && upper_positive, os.str()};
}

Outcome programmed_circuits() {
  const auto t0 = std::chrono::steady_clock::now();
  int worst_violations = 0;
  int cost_violations = 0;
  double worst_ratio = 0.0;
  int runs = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 6;
    const int depth = 1 + (i / 6) % 4;
    const BrickworkCircuit c = random_brickwork(n, depth, 1, Geometry::line, sub_seed(0xacce, i));
    const double ell = static_cast<double>(c.num_gates());
    for (double eps : {0.2, 0.5, 1.0}) {
      const ProgrammedCircuit p = program_circuit(c, eps);
      ++runs;
      worst_ratio = std::max(worst_ratio, p.achieved_error / eps);
      if (!(p.achieved_error <= eps)) ++worst_violations;
      const double budget = ell * (std::log2(std::numbers::e * n) + 8.0 * std::log2(12.0 * ell / eps));
      if (!(p.total_cost_bits <= budget)) ++cost_violations;
    }
  }
  const double s = seconds_since(t0);
  return {worst_violations == 0 && cost_violations == 0 && s < 120.0,
          fmt("%.0f programs, max error/eps %.4f, %.0f cost-budget violations, %.1f s (limit 120 s)",
              runs, worst_ratio, cost_violations, s)};
}

Outcome error_propagation() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const int k = 1 + i % 2;
    const BrickworkCircuit c =
        random_brickwork(6, 2 + i % 3, k, i % 3 ? Geometry::line : Geometry::complete, sub_seed(0xe77, i));
    const double pge = i % 2 ? 1e-3 : 0.05;
    worst = std::max(worst, verify_error_propagation(c, pge, 10, sub_seed(0xe78, i)));
  }
  const double s = seconds_since(t0);
  return {worst <= 1.0 + 1e-6 && s < 120.0,
          fmt("100 trials on N = 6, max ratio %.6f (limit 1 + 1e-6), %.1f s", worst, s)};
}

Outcome diamond_sandwich() {
  double worst = INFINITY;
  for (int d : {2, 4}) {
    for (int i = 0; i < 1000; ++i) {
      const DenseMatrix u = haar_unitary(d, sub_seed(0xd1a + d, 2 * i));
      const DenseMatrix v = haar_unitary(d, sub_seed(0xd1a + d, 2 * i + 1));
      const double dd = diamond_distance_unitary(u, v);
      const double po = phase_optimized_distance(u, v);
      worst = std::min({worst, dd - po, 2 * po - dd});
    }
  }
  return {worst >= -1e-8, fmt("2000 pairs, minimum slack %.3e (limit -1e-8)", worst)};
}

Outcome depolarizing_coefficient() {
  const auto t0 = std::chrono::steady_clock::now();
  // p = (E|Tr U|^4 - 1) / 3 with E|Tr U|^4 = 2 for U(2).
  const double moment4 = 2.0;
  const double expected = (moment4 - 1.0) / 3.0;
  const MOEstimate e = estimate_p(haar_unitary(2, 0x7e57), {1, {}}, 100000, UnitaryEnsemble::haar, 0x7e58);
  const double s = seconds_since(t0);
  const double z = std::abs(e.p_hat - expected) / e.stderr_p;
  return {z <= kSigmas && s < 60.0,
          fmt("p_hat %.5f +- %.5f vs %.5f (%.2f sigma)", e.p_hat, e.stderr_p, expected, z) +
              fmt(", %.1f s", s)};
}

Outcome exact_design_channel() {
  const DenseMatrix u = haar_unitary(2, 0x8a);
  const MOEstimate haar = simulate_mo_channel(u, {1, {}}, 100000, UnitaryEnsemble::haar, 0x8b);
  const MOEstimate cliff = simulate_mo_channel(u, {1, {}}, 1, UnitaryEnsemble::clifford, 0);
  double worst = 0.0;
  bool ok = true;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const std::complex<double> d = haar.choi_hat(r, c) - cliff.choi_hat(r, c);
      for (auto [diff, se] : {std::pair{d.real(), haar.choi_stderr_re(r, c)},
                              std::pair{d.imag(), haar.choi_stderr_im(r, c)}}) {
        if (se == 0.0) {
          ok = ok && std::abs(diff) <= 1e-12;
          continue;
        }
        worst = std::max(worst, std::abs(diff) / se);
      }
    }
  }
  return {ok && worst <= kSigmas, fmt("32 Choi components, max deviation %.2f sigma", worst)};
}

Outcome phase_gate_bound() {
  std::mt19937_64 rng(0x9a);
  std::uniform_real_distribution<double> angle(0, 2 * kPi), shift(-1.0, 1.0);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<int> s{0, 1, 2};
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(1 + rng() % 2);
    const double t = angle(rng);
    const auto axis = static_cast<PauliAxis>(rng() % 3);
    if (!phase_gate_error(t, t + shift(rng), axis, s, 3).holds) ++violations;
  }
  return {violations == 0, fmt("1000 random pairs, %.0f violations", violations)};
}

Outcome lightcone_soundness() {
  double worst_gap = 0.0;
  bool structure = true;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 7;
    const int depth = 1 + i % 5;
    const int k = 1 + i % std::min(3, n);
    const BrickworkCircuit c = random_brickwork(n, depth, k, i % 2 ? Geometry::complete : Geometry::line,
                                                sub_seed(0x10c, i));
    const int w = 1 + i % depth;
    const DecompositionCheck chk = verify_decomposition(c, decompose(c, w));
    worst_gap = std::max(worst_gap, chk.unitary_gap);
    structure = structure && chk.disjoint && chk.order_ok;
  }

  std::mt19937_64 rng(0x10d);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  double merge_gap = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto axis = static_cast<PauliAxis>(t % 3);
    const std::vector<std::vector<int>> supports{{0, 1}, {2, 3}, {1, 4}};
    std::vector<GateSlot> gates;
    for (int j = 0; j < 10; ++j) {
      std::vector<int> s = supports[rng() % 3];
      std::shuffle(s.begin(), s.end(), rng);
      gates.push_back({s, make_pauli_gate(axis, angle(rng)), 0});
    }
    auto product = [](const std::vector<GateSlot>& gs) {
      DenseMatrix u = DenseMatrix::Identity(32, 32);
      for (const GateSlot& g : gs) {
        const auto& r = std::get<PauliRotationGate>(g.gate);
        u = pauli_rotation(r.axis, g.support, r.theta, 5) * u;
      }
      return u;
    };
    merge_gap = std::max(merge_gap, operator_norm(product(gates) - product(merge_pauli_cone(gates))));
  }

  const TradeoffReport few = structured_tradeoff(std::vector<ConeCost>(4, {2, 4, 25, 0}), 100, 2, 16, 4, 0.01);
  const TradeoffReport none = structured_tradeoff(std::vector<ConeCost>(4, {25, 12, 25, 0}), 100, 2, 16, 4, 0.01);
  const bool direction = few.reduced_bits < few.primitive_bits && none.reduced_bits >= none.primitive_bits;

  std::ostringstream os;
  os << "replay gap " << worst_gap << " (limit 1e-9), partition/order " << (structure ? "ok" : "broken")
     << ", merge gap " << merge_gap << " (limit 1e-10), structured direction "
     << (direction ? "reproduced" : "not reproduced") << " (" << few.reduced_bits << " < "
     << few.primitive_bits << "; " << none.reduced_bits << " >= " << none.primitive_bits << ")";
  return {worst_gap <= 1e-9 && structure && merge_gap <= 1e-10 && direction, os.str()};
}

Outcome no_saving() {
  const auto pts = generic_tradeoff_sweep(4, 20, 0.1);
  // Smallest index after which the ratio increases strictly.
  std::size_t from = pts.size() - 1;
  while (from > 0 && pts[from].ratio > pts[from - 1].ratio) --from;
  const bool eventually = from + 2 < pts.size() && pts.back().ratio > 1.0;
  return {eventually, fmt("ratio increasing from N = 2^%.0f to 2^20, final ratio %.3e",
                          std::log2(double(pts[from].n)), pts.back().ratio)};
}

Outcome holevo_properties() {
  std::mt19937_64 rng(0x12);
  std::normal_distribution<double> g;
  auto random_state = [&](int d) {
    StateVector v(d);
    for (int i = 0; i < d; ++i) v(i) = {g(rng), g(rng)};
    return density_of(v);
  };
  auto random_mixed = [&](int d) {
    DenseMatrix a(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
    }
    DenseMatrix r = a * a.adjoint();
    return DenseMatrix(r / r.trace().real());
  };
  double worst = INFINITY;
  for (int e = 0; e < 100; ++e) {
    const int d = 2 + e % 3;
    const int members = 2 + e % 5;
    std::vector<Ensemble::Member> ms;
    std::vector<double> w(static_cast<std::size_t>(members));
    double total = 0.0;
    for (double& x : w) total += (x = 0.05 + std::abs(g(rng)));
    for (int j = 0; j < members; ++j) {
      ms.push_back({w[static_cast<std::size_t>(j)] / total, e % 2 ? random_state(d) : random_mixed(d)});
    }
    const double chi = holevo_information(Ensemble(Ensemble::Kind::states, ms));
    const DenseMatrix u = haar_unitary(d, sub_seed(0x13, e));
    std::vector<Ensemble::Member> mapped;
    for (const auto& m : ms) mapped.push_back({m.weight, apply_channel_depolarizing(m.matrix, u, 0.7)});
    const double chi_out = holevo_information(Ensemble(Ensemble::Kind::states, mapped));
    worst = std::min({worst, chi, std::log(double(d)) - chi, chi - chi_out});
  }
  double afw = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const DenseMatrix a = i % 2 ? random_state(2) : random_mixed(2);
    const DenseMatrix b = i % 3 ? random_mixed(2) : random_state(2);
    afw = std::min(afw, afw_slack(a, b, 2));
  }
  return {worst >= -1e-9 && afw >= 0.0,
          fmt("100 ensembles, minimum Holevo slack %.3e (limit -1e-9); 1000 pairs, minimum AFW slack %.3e",
              worst, afw)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--known-failure") known.insert(std::atoi(argv[++i]));
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Schur-Weyl dimension identity", schur_weyl_identity},
      {"binomial lower-bound inequality", binomial_inequality},
      {"lower/upper bound ordering and scaling", bound_scaling},
      {"programmed circuits within error and cost budget", programmed_circuits},
      {"error propagation", error_propagation},
      {"diamond-norm sandwich", diamond_sandwich},
      {"MO depolarizing coefficient", depolarizing_coefficient},
      {"exact-design MO channel", exact_design_channel},
      {"phase-gate error bound", phase_gate_bound},
      {"light-cone soundness", lightcone_soundness},
      {"reduced-cost ratio eventually increasing", no_saving},
      {"Holevo and AFW properties", holevo_properties},
  };
  int failed = 0;
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %s: %s -- %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (!known.count(id)) ++unexpected;
    } else if (known.count(id)) {
      std::printf("criterion %2d was listed as a known failure but passed\n", id);
    }
  }
  std::printf("%d of %zu criteria passed; %d failed (%d not listed as known failures)\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), failed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
