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

#include "qprog/processor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "qprog/error.hpp"
#include "qprog/parallel.hpp"

namespace qprog {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxProgramDenseQubits = 10;
constexpr int kMaxPropagationQubits = 8;

DenseMatrix euler_zyz(double alpha, double beta, double gamma) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  DenseMatrix m(2, 2);
  m(0, 0) = std::exp(-i * ((alpha + gamma) / 2.0)) * c;
  m(0, 1) = -std::exp(-i * ((alpha - gamma) / 2.0)) * s;
  m(1, 0) = std::exp(i * ((alpha - gamma) / 2.0)) * s;
  m(1, 1) = std::exp(i * ((alpha + gamma) / 2.0)) * c;
  return m;
}

std::uint64_t wrap_index(long long i, std::uint64_t steps) {
  const auto n = static_cast<long long>(steps);
  return static_cast<std::uint64_t>(((i % n) + n) % n);
}

void check_net_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must lie in (0, 1]");
}

}  // namespace

double qubit_diamond_distance(const DenseMatrix& u, const DenseMatrix& v) {
  if (u.rows() != 2 || u.cols() != 2 || v.rows() != 2 || v.cols() != 2) {
    fail(ErrorCode::DimensionMismatch, "qubit_diamond_distance expects 2 x 2 matrices");
  }
  if (!is_unitary(u, 1e-9) || !is_unitary(v, 1e-9)) {
    fail(ErrorCode::NotUnitary, "qubit_diamond_distance requires unitary inputs");
  }
  DenseMatrix w = u.adjoint() * v;
  w /= std::sqrt(w.determinant());
  // Projection onto SU(2) form [[a, -conj(b)], [b, conj(a)]].
  const Complex a = 0.5 * (w(0, 0) + std::conj(w(1, 1)));
  const Complex b = 0.5 * (w(1, 0) - std::conj(w(0, 1)));
  const double half_arc = std::atan2(std::hypot(a.imag(), std::abs(b)), std::abs(a.real()));
  return 2.0 * std::sin(half_arc);
}

std::uint64_t EpsilonNet::size() const {
  if (construction_ == NetConstruction::sampled) return elements_.size();
  return 2 * alpha_steps_ + (beta_steps_ - 1) * alpha_steps_ * alpha_steps_;
}

double EpsilonNet::log2_size() const { return std::log2(static_cast<double>(size())); }

EpsilonNet::Angles EpsilonNet::grid_angles(std::uint64_t t) const {
  const double da = kTwoPi / static_cast<double>(alpha_steps_);
  if (t < alpha_steps_) return {da * static_cast<double>(t), 0.0, 0.0};
  if (t < 2 * alpha_steps_) return {da * static_cast<double>(t - alpha_steps_), kPi, 0.0};
  const std::uint64_t u = t - 2 * alpha_steps_;
  const std::uint64_t plane = alpha_steps_ * alpha_steps_;
  const std::uint64_t j = 1 + u / plane;
  const std::uint64_t r = u % plane;
  return {da * static_cast<double>(r / alpha_steps_),
          kPi * static_cast<double>(j) / static_cast<double>(beta_steps_),
          da * static_cast<double>(r % alpha_steps_)};
}

DenseMatrix EpsilonNet::element(std::uint64_t t) const {
  if (t >= size()) fail(ErrorCode::IndexOutOfRange, "net index out of range");
  if (construction_ == NetConstruction::sampled) return elements_[t];
  const Angles a = grid_angles(t);
  return euler_zyz(a.alpha, a.beta, a.gamma);
}

std::pair<std::uint64_t, double> EpsilonNet::nearest(const DenseMatrix& u) const {
  const Eigen::Index dim = Eigen::Index{1} << locality_;
  if (u.rows() != dim || u.cols() != dim) {
    fail(ErrorCode::DimensionMismatch, "unitary does not match the net locality");
  }
  std::uint64_t best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  auto consider = [&](std::uint64_t t, const DenseMatrix& candidate) {
    const double gap = locality_ == 1 ? qubit_diamond_distance(u, candidate)
                                      : diamond_distance_unitary(u, candidate);
    if (gap < best_gap || (gap == best_gap && t < best)) {
      best_gap = gap;
      best = t;
    }
  };

  if (construction_ == NetConstruction::sampled) {
    for (std::uint64_t t = 0; t < elements_.size(); ++t) consider(t, elements_[t]);
    return {best, best_gap};
  }

  if (!is_unitary(u, 1e-9)) fail(ErrorCode::NotUnitary, "nearest requires a unitary");
  // Euler angles of u / sqrt(det u); the sign ambiguity is a global phase.
  const DenseMatrix v = u / std::sqrt(u.determinant());
  const Complex a = v(0, 0);
  const Complex b = v(1, 0);
  const double arg_a = std::abs(a) > 1e-300 ? std::arg(a) : 0.0;
  const double arg_b = std::abs(b) > 1e-300 ? std::arg(b) : 0.0;
  const double beta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  const double alpha = arg_b - arg_a;
  const double gamma = -arg_a - arg_b;

  const double da = kTwoPi / static_cast<double>(alpha_steps_);
  const double db = kPi / static_cast<double>(beta_steps_);
  const auto ia = std::llround(alpha / da);
  const auto jb = std::llround(beta / db);
  const auto mg = std::llround(gamma / da);
  const auto jb_max = static_cast<long long>(beta_steps_) - 1;
  for (long long dj = -1; dj <= 1; ++dj) {
    const long long j = jb + dj;
    if (j < 1 || j > jb_max) continue;
    for (long long di = -1; di <= 1; ++di) {
      for (long long dm = -1; dm <= 1; ++dm) {
        const std::uint64_t i = wrap_index(ia + di, alpha_steps_);
        const std::uint64_t m = wrap_index(mg + dm, alpha_steps_);
        const std::uint64_t t = 2 * alpha_steps_ +
                                (static_cast<std::uint64_t>(j) - 1) * alpha_steps_ * alpha_steps_ +
                                i * alpha_steps_ + m;
        consider(t, element(t));
      }
    }
  }
  const auto pole0 = std::llround((alpha + gamma) / da);
  const auto pole_pi = std::llround((alpha - gamma) / da);
  for (long long d = -1; d <= 1; ++d) {
    const std::uint64_t t0 = wrap_index(pole0 + d, alpha_steps_);
    consider(t0, element(t0));
    const std::uint64_t t1 = alpha_steps_ + wrap_index(pole_pi + d, alpha_steps_);
    consider(t1, element(t1));
  }
  return {best, best_gap};
}

double audit_coverage(const EpsilonNet& net, const std::vector<DenseMatrix>& samples) {
  std::vector<double> gaps(samples.size(), 0.0);
  parallel_for(samples.size(), [&](std::size_t i) { gaps[i] = net.nearest(samples[i]).second; });
  return gaps.empty() ? 0.0 : *std::max_element(gaps.begin(), gaps.end());
}

namespace {

CoverageCertificate run_audit(const EpsilonNet& net, long long samples, std::uint64_t seed) {
  std::vector<DenseMatrix> audit;
  audit.reserve(static_cast<std::size_t>(std::max(0LL, samples)));
  for (long long i = 0; i < samples; ++i) {
    audit.push_back(haar_unitary(1 << net.locality(), sub_seed(seed, static_cast<std::uint64_t>(i))));
  }
  return {std::max(0LL, samples), audit_coverage(net, audit)};
}

}  // namespace

EpsilonNet build_net_u2(double eps, long long audit_samples, std::uint64_t audit_seed) {
  check_net_eps(eps);
  const double pitch = (4.0 / 3.0) * std::asin(eps / 2.0);
  EpsilonNet net;
  net.locality_ = 1;
  net.target_eps_ = eps;
  net.construction_ = NetConstruction::grid;
  net.alpha_steps_ = static_cast<std::uint64_t>(std::ceil(kTwoPi / pitch - 1e-12));
  net.beta_steps_ = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(kPi / pitch - 1e-12)));
  net.certificate_ = run_audit(net, audit_samples, audit_seed);
  return net;
}

EpsilonNet build_net_sampled(int k, double eps, long long budget, std::uint64_t seed,
                             long long audit_samples) {
  if (k < 1 || k > 2) fail(ErrorCode::InvalidParams, "sampled nets support k in {1, 2}");
  if (budget < 1) fail(ErrorCode::InvalidParams, "budget must be >= 1");
  if (!(eps > 0.0 && eps <= 2.0)) fail(ErrorCode::InvalidParams, "eps must lie in (0, 2]");
  EpsilonNet net;
  net.locality_ = k;
  net.target_eps_ = eps;
  net.construction_ = NetConstruction::sampled;
  net.elements_.resize(static_cast<std::size_t>(budget));
  parallel_for(net.elements_.size(), [&](std::size_t i) {
    net.elements_[i] = haar_unitary(1 << k, sub_seed(seed, i));
  });
  net.certificate_ = run_audit(net, audit_samples, splitmix64(seed ^ 0xa0d17ULL));
  return net;
}

std::pair<std::uint64_t, double> program_state_for(const DenseMatrix& u, const EpsilonNet& net) {
  return net.nearest(u);
}

DenseMatrix apply_processor(const DenseMatrix& rho, std::uint64_t t, const EpsilonNet& net) {
  if (t >= net.size()) fail(ErrorCode::IndexOutOfRange, "program index out of range");
  const DenseMatrix u = net.element(t);
  if (rho.rows() != u.rows() || rho.cols() != u.cols()) {
    fail(ErrorCode::DimensionMismatch, "state does not match the net dimension");
  }
  return u * rho * u.adjoint();
}

DenseMatrix apply_processor_mixed(const DenseMatrix& rho,
                                  const std::vector<std::pair<std::uint64_t, double>>& program,
                                  const EpsilonNet& net) {
  double total = 0.0;
  DenseMatrix out = DenseMatrix::Zero(rho.rows(), rho.cols());
  for (auto [t, p] : program) {
    if (!(p >= 0.0)) fail(ErrorCode::InvalidParams, "program weights must be non-negative");
    total += p;
    out += p * apply_processor(rho, t, net);
  }
  if (std::abs(total - 1.0) > 1e-12) fail(ErrorCode::InvalidParams, "program weights must sum to 1");
  return out;
}

std::vector<std::vector<int>> valid_supports(const ConnectivityGraph& graph, int k) {
  const int n = graph.num_qubits();
  if (k < 1 || k > n) fail(ErrorCode::InvalidParams, "need 1 <= k <= N");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (graph.induces_connected(current)) out.push_back(current);
      return;
    }
    for (int q = 0; q < n; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      used[static_cast<std::size_t>(q)] = true;
      current.push_back(q);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(q)] = false;
    }
  };
  extend(extend);
  return out;
}

std::pair<int, std::vector<int>> decode_location(const ConnectivityGraph& graph, int k,
                                                 const ProgramState& program,
                                                 std::uint64_t location) {
  const auto supports = valid_supports(graph, k);
  if (supports.size() != program.support_count || program.support_count == 0) {
    fail(ErrorCode::DimensionMismatch, "program was built for a different graph");
  }
  const std::uint64_t sidx = location % program.support_count;
  return {static_cast<int>(location / program.support_count), supports[sidx]};
}

ProgrammedCircuit program_circuit(const BrickworkCircuit& circuit, double eps,
                                  std::shared_ptr<const EpsilonNet> net, bool dense_check) {
  check_net_eps(eps);
  const std::size_t ell = circuit.num_gates();
  if (ell < 1) fail(ErrorCode::InvalidParams, "circuit has no gates");
  const int k = circuit.locality();
  const int n = circuit.num_qubits();
  if (dense_check && n > kMaxProgramDenseQubits) {
    fail(ErrorCode::TooLarge, "dense error check is limited to N <= 10");
  }
  const double per_gate = eps / static_cast<double>(ell);
  if (net) {
    if (net->locality() != k || !net->certified() || net->target_eps() > per_gate * (1.0 + 1e-12)) {
      fail(ErrorCode::NoCertifiedNet, "supplied net is not a certified eps/l net for this locality");
    }
  } else if (k == 1) {
    net = std::make_shared<const EpsilonNet>(build_net_u2(per_gate, 64));
  } else {
    fail(ErrorCode::NoCertifiedNet,
         "no certified net is available for k = " + std::to_string(k) + "; supply one");
  }

  const auto supports = valid_supports(circuit.graph(), k);
  std::map<std::vector<int>, std::uint64_t> support_index;
  for (std::size_t i = 0; i < supports.size(); ++i) support_index[supports[i]] = i;
  const double pairs = static_cast<double>(supports.size()) * circuit.depth();

  ProgrammedCircuit out;
  out.net = net;
  out.per_gate_eps = per_gate;
  out.program.support_count = supports.size();
  out.program.location_bits = pairs <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(pairs) - 1e-12));
  out.program.gates.resize(ell);
  parallel_for(ell, [&](std::size_t j) {
    const auto& slot = circuit.slots()[j];
    auto [t, gap] = net->nearest(gate_matrix(slot.gate, k));
    out.program.gates[j] = {static_cast<std::uint64_t>(slot.layer) * supports.size() +
                                support_index.at(slot.support),
                            t, gap};
  });
  for (const auto& g : out.program.gates) out.gap_sum += g.gap;
  out.total_cost_bits = static_cast<double>(ell) * (out.program.location_bits + net->log2_size());

  if (!dense_check) {
    out.achieved_error = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  DenseMatrix programmed = DenseMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int r = 0; r < circuit.depth(); ++r) {
    for (std::size_t j : circuit.layer(r)) {
      apply_gate_left(programmed, net->element(out.program.gates[j].net_index),
                      circuit.slots()[j].support, n);
    }
  }
  out.achieved_error = diamond_distance_unitary(circuit_unitary(circuit), programmed);
  return out;
}

double verify_error_propagation(const BrickworkCircuit& circuit, double per_gate_eps,
                                int trials, std::uint64_t seed) {
  const int n = circuit.num_qubits();
  if (n > kMaxPropagationQubits) fail(ErrorCode::TooLarge, "error propagation check needs N <= 8");
  if (trials < 1) fail(ErrorCode::InvalidParams, "trials must be >= 1");
  if (!(per_gate_eps >= 0.0)) fail(ErrorCode::InvalidParams, "per-gate error must be >= 0");
  const std::size_t ell = circuit.num_gates();
  if (ell == 0 || per_gate_eps == 0.0) return 0.0;

  const int k = circuit.locality();
  const int dim = 1 << k;
  const double max_arc = per_gate_eps >= 2.0 ? kPi : 2.0 * std::asin(per_gate_eps / 2.0);
  const DenseMatrix exact = circuit_unitary(circuit);
  std::vector<double> ratios(static_cast<std::size_t>(trials), 0.0);

  parallel_for(ratios.size(), [&](std::size_t trial) {
    const std::uint64_t trial_seed = sub_seed(seed, trial);
    std::mt19937_64 rng(trial_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    DenseMatrix perturbed = DenseMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int r = 0; r < circuit.depth(); ++r) {
      for (std::size_t j : circuit.layer(r)) {
        // Eigenphases pinned at 0 and max_arc put the error exactly at the budget.
        Eigen::VectorXcd phases(dim);
        for (int p = 0; p < dim; ++p) {
          const double angle = p == 0 ? 0.0 : (p == 1 ? max_arc : max_arc * unit(rng));
          phases(p) = std::polar(1.0, angle);
        }
        const DenseMatrix basis = haar_unitary(dim, sub_seed(trial_seed, j));
        const DenseMatrix error = basis * phases.asDiagonal() * basis.adjoint();
        const auto& slot = circuit.slots()[j];
        apply_gate_left(perturbed, gate_matrix(slot.gate, k) * error, slot.support, n);
      }
    }
    ratios[trial] = diamond_distance_unitary(exact, perturbed) /
                    (static_cast<double>(ell) * per_gate_eps);
  });
  return *std::max_element(ratios.begin(), ratios.end());
}

}  // namespace qprog
