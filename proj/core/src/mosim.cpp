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

#include "qprog/mosim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "qprog/error.hpp"
#include "qprog/parallel.hpp"

namespace qprog {
namespace {

constexpr int kDim = 2;
constexpr int kBlocks = 32;
constexpr long long kMinSamples = 1000;

struct Block {
  Partition shape;
  std::vector<StateVector> basis;  // orthonormal real basis of W_lambda in (C^2)^{(x) n}
};

std::vector<Block> schur_blocks(int n) {
  const double r = 1.0 / std::sqrt(2.0);
  auto vec = [](std::initializer_list<double> v) {
    StateVector s(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) s(i++) = x;
    return s;
  };
  if (n == 1) return {{Partition({1}), {vec({1, 0}), vec({0, 1})}}};
  return {{Partition({2}), {vec({1, 0, 0, 0}), vec({0, r, r, 0}), vec({0, 0, 0, 1})}},
          {Partition({1, 1}), {vec({0, r, -r, 0})}}};
}

/// sum_lambda c_lambda |Phi+_{W_lambda}> on S (x) R, index s * 2^n + r.
StateVector assemble(int n, const std::vector<Block>& blocks, const std::vector<double>& coeff) {
  const Eigen::Index side = Eigen::Index{1} << n;
  StateVector psi = StateVector::Zero(side * side);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const double scale = coeff[b] / std::sqrt(static_cast<double>(blocks[b].basis.size()));
    for (const auto& t : blocks[b].basis) {
      for (Eigen::Index s = 0; s < side; ++s) {
        for (Eigen::Index r = 0; r < side; ++r) psi(s * side + r) += scale * t(s) * t(r);
      }
    }
  }
  return psi;
}

DenseMatrix tensor_power(const DenseMatrix& v, int n) {
  DenseMatrix out = v;
  for (int i = 1; i < n; ++i) out = kron(out, v);
  return out;
}

/// <psi0| (W (x) I) |psiP> with W acting on the system register.
Complex overlap(const StateVector& psi0, const DenseMatrix& w, const StateVector& psi_p) {
  const Eigen::Index side = w.rows();
  const auto m0 = Eigen::Map<const Eigen::MatrixXcd>(psi0.data(), side, side);
  const auto mp = Eigen::Map<const Eigen::MatrixXcd>(psi_p.data(), side, side);
  // The column-major maps read entry (r, s) as psi[s * side + r].
  Complex acc = 0.0;
  const Eigen::MatrixXcd moved = mp * w.transpose();
  for (Eigen::Index r = 0; r < side; ++r) {
    for (Eigen::Index s = 0; s < side; ++s) acc += std::conj(m0(r, s)) * moved(r, s);
  }
  return acc;
}

void require_qubit_unitary(const DenseMatrix& u) {
  if (u.rows() != kDim || u.cols() != kDim) fail(ErrorCode::DimensionMismatch, "U must be 2 x 2");
  if (!is_unitary(u, 1e-9)) fail(ErrorCode::NotUnitary, "U is not unitary");
}

void require_samples(long long samples) {
  if (samples < kMinSamples) {
    fail(ErrorCode::InvalidParams, "samples must be >= " + std::to_string(kMinSamples));
  }
}

std::pair<long long, long long> block_range(long long samples, int b) {
  return {samples * b / kBlocks, samples * (b + 1) / kBlocks};
}

/// Kahan-compensated running sum of matrices.
struct MatrixSum {
  DenseMatrix sum;
  DenseMatrix carry;
  explicit MatrixSum(Eigen::Index dim)
      : sum(DenseMatrix::Zero(dim, dim)), carry(DenseMatrix::Zero(dim, dim)) {}
  void add(const DenseMatrix& x) {
    const DenseMatrix y = x - carry;
    const DenseMatrix t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double jackknife(const std::vector<double>& leave_one_out) {
  const double nb = static_cast<double>(leave_one_out.size());
  const double mean = std::accumulate(leave_one_out.begin(), leave_one_out.end(), 0.0) / nb;
  double ss = 0.0;
  for (double v : leave_one_out) ss += (v - mean) * (v - mean);
  return std::sqrt((nb - 1.0) / nb * ss);
}

double p_from_choi(const DenseMatrix& choi, const DenseMatrix& target_choi) {
  const double d2 = kDim * kDim;
  const double fidelity = (choi * target_choi).trace().real() / d2;
  return (d2 * fidelity - 1.0) / (d2 - 1.0);
}

}  // namespace

ProbeBlocks probe_blocks(const ProbeConfig& cfg) {
  if (cfg.n != 1 && cfg.n != 2) fail(ErrorCode::UnsupportedN, "only n = 1 and n = 2 are supported");
  ProbeBlocks out;
  out.shapes = partitions(cfg.n, kDim);
  if (cfg.q.empty()) {
    out.weights.assign(out.shapes.size(), 1.0 / static_cast<double>(out.shapes.size()));
    return out;
  }
  if (cfg.q.size() != out.shapes.size()) {
    fail(ErrorCode::InvalidParams,
         "q needs " + std::to_string(out.shapes.size()) + " weights for n = " + std::to_string(cfg.n));
  }
  double total = 0.0;
  for (double w : cfg.q) {
    if (!(w >= 0.0)) fail(ErrorCode::InvalidParams, "q weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) fail(ErrorCode::InvalidParams, "q weights must sum to 1");
  out.weights = cfg.q;
  return out;
}

StateVector probe_state(const ProbeConfig& cfg) {
  const ProbeBlocks pb = probe_blocks(cfg);
  std::vector<double> coeff;
  for (double w : pb.weights) coeff.push_back(std::sqrt(w));
  return assemble(cfg.n, schur_blocks(cfg.n), coeff);
}

StateVector measurement_seed_state(const ProbeConfig& cfg) {
  const ProbeBlocks pb = probe_blocks(cfg);
  const auto blocks = schur_blocks(cfg.n);
  std::vector<double> coeff;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    coeff.push_back(pb.weights[b] > 0.0 ? static_cast<double>(blocks[b].basis.size()) : 0.0);
  }
  return assemble(cfg.n, blocks, coeff);
}

UnitaryEnsemble ensemble_from_string(std::string_view name) {
  if (name == "haar") return UnitaryEnsemble::haar;
  if (name == "clifford") return UnitaryEnsemble::clifford;
  fail(ErrorCode::InvalidParams, "ensemble must be haar or clifford");
}

std::string to_string(UnitaryEnsemble ensemble) {
  return ensemble == UnitaryEnsemble::haar ? "haar" : "clifford";
}

const std::vector<DenseMatrix>& clifford_group() {
  static const std::vector<DenseMatrix> group = [] {
    const double r = 1.0 / std::sqrt(2.0);
    DenseMatrix h(2, 2);
    h << r, r, r, -r;
    DenseMatrix s(2, 2);
    s << 1, 0, 0, Complex(0, 1);
    auto same_channel = [](const DenseMatrix& a, const DenseMatrix& b) {
      return std::abs(std::abs((a.adjoint() * b).trace()) - 2.0) < 1e-9;
    };
    std::vector<DenseMatrix> found{DenseMatrix::Identity(2, 2)};
    std::deque<DenseMatrix> frontier{found.front()};
    while (!frontier.empty()) {
      const DenseMatrix g = frontier.front();
      frontier.pop_front();
      for (const DenseMatrix* gen : {&h, &s}) {
        DenseMatrix next = (*gen) * g;
        // Fix the phase so the first non-negligible entry is real positive.
        for (Eigen::Index i = 0; i < 4; ++i) {
          const Complex z = next(i % 2, i / 2);
          if (std::abs(z) > 1e-6) {
            next *= std::conj(z) / std::abs(z);
            break;
          }
        }
        const bool seen = std::any_of(found.begin(), found.end(),
                                      [&](const DenseMatrix& f) { return same_channel(f, next); });
        if (!seen) {
          found.push_back(next);
          frontier.push_back(next);
        }
      }
    }
    return found;
  }();
  return group;
}

MOEstimate estimate_p(const DenseMatrix& u, const ProbeConfig& cfg, long long samples,
                      UnitaryEnsemble ensemble, std::uint64_t seed) {
  require_qubit_unitary(u);
  const ProbeBlocks pb = probe_blocks(cfg);
  std::vector<std::vector<Partition>> branches;
  for (const auto& shape : pb.shapes) branches.push_back(add_box_branching(shape, kDim));

  auto weight = [&](const DenseMatrix& u_hat) {
    Eigen::ComplexEigenSolver<DenseMatrix> solver(u_hat * u.adjoint(), false);
    Complex x = solver.eigenvalues()(0);
    Complex y = solver.eigenvalues()(1);
    x /= std::abs(x);
    y /= std::abs(y);
    Complex total = 0.0;
    for (std::size_t b = 0; b < pb.shapes.size(); ++b) {
      Complex inner = 0.0;
      for (const auto& gamma : branches[b]) inner += schur_character(gamma, x, y);
      total += std::sqrt(pb.weights[b]) * inner;
    }
    return std::norm(total);
  };

  MOEstimate est;
  est.ensemble = ensemble;
  if (ensemble == UnitaryEnsemble::clifford) {
    const auto& group = clifford_group();
    double sum = 0.0;
    for (const auto& c : group) sum += weight(c);
    est.samples = static_cast<long long>(group.size());
    est.mean_weight = sum / static_cast<double>(group.size());
    est.p_hat = (est.mean_weight - 1.0) / (kDim * kDim - 1.0);
    return est;
  }

  require_samples(samples);
  std::vector<double> block_sum(kBlocks, 0.0);
  parallel_for(kBlocks, [&](std::size_t b) {
    auto [lo, hi] = block_range(samples, static_cast<int>(b));
    double acc = 0.0;
    for (long long i = lo; i < hi; ++i) {
      acc += weight(haar_unitary(kDim, sub_seed(seed, static_cast<std::uint64_t>(i))));
    }
    block_sum[b] = acc;
  });
  const double total = std::accumulate(block_sum.begin(), block_sum.end(), 0.0);
  const double n = static_cast<double>(samples);
  std::vector<double> loo(kBlocks);
  for (int b = 0; b < kBlocks; ++b) {
    auto [lo, hi] = block_range(samples, b);
    const double mean = (total - block_sum[b]) / (n - static_cast<double>(hi - lo));
    loo[b] = (mean - 1.0) / (kDim * kDim - 1.0);
  }
  est.samples = samples;
  est.mean_weight = total / n;
  est.p_hat = (est.mean_weight - 1.0) / (kDim * kDim - 1.0);
  est.stderr_p = jackknife(loo);
  return est;
}

MOEstimate simulate_mo_channel(const DenseMatrix& u, const ProbeConfig& cfg, long long samples,
                               UnitaryEnsemble ensemble, std::uint64_t seed) {
  require_qubit_unitary(u);
  const StateVector psi_p = probe_state(cfg);
  const StateVector psi0 = measurement_seed_state(cfg);
  const DenseMatrix u_n = tensor_power(u, cfg.n);
  const DenseMatrix target_choi = choi_of_unitary(u);
  const Eigen::Index cdim = kDim * kDim;

  auto weight = [&](const DenseMatrix& u_hat) {
    return std::norm(overlap(psi0, tensor_power(u_hat.adjoint(), cfg.n) * u_n, psi_p));
  };

  MOEstimate est;
  est.ensemble = ensemble;
  est.choi_stderr_re = Eigen::MatrixXd::Zero(cdim, cdim);
  est.choi_stderr_im = Eigen::MatrixXd::Zero(cdim, cdim);

  auto finish = [&](const DenseMatrix& choi) {
    est.choi_hat = 0.5 * (choi + choi.adjoint());
    est.p_hat = p_from_choi(est.choi_hat, target_choi);
    const DenseMatrix model =
        est.p_hat * target_choi +
        (1.0 - est.p_hat) * DenseMatrix::Identity(cdim, cdim) / static_cast<double>(kDim);
    est.fit_residual = trace_norm(est.choi_hat - model);
    const double spread =
        std::sqrt(est.choi_stderr_re.squaredNorm() + est.choi_stderr_im.squaredNorm());
    est.fit_tolerance = std::max(5.0 * kDim * spread, 1e-9);
  };

  if (ensemble == UnitaryEnsemble::clifford) {
    const auto& group = clifford_group();
    MatrixSum acc(cdim);
    double wsum = 0.0;
    for (const auto& c : group) {
      const double w = weight(c);
      wsum += w;
      acc.add(w * choi_of_unitary(c));
    }
    est.samples = static_cast<long long>(group.size());
    est.mean_weight = wsum / static_cast<double>(group.size());
    finish(acc.sum / wsum);
    return est;
  }

  require_samples(samples);
  std::vector<double> block_w(kBlocks, 0.0);
  std::vector<DenseMatrix> block_c(kBlocks);
  parallel_for(kBlocks, [&](std::size_t b) {
    auto [lo, hi] = block_range(samples, static_cast<int>(b));
    MatrixSum acc(cdim);
    double wsum = 0.0;
    for (long long i = lo; i < hi; ++i) {
      const DenseMatrix u_hat = haar_unitary(kDim, sub_seed(seed, static_cast<std::uint64_t>(i)));
      const double w = weight(u_hat);
      wsum += w;
      acc.add(w * choi_of_unitary(u_hat));
    }
    block_w[b] = wsum;
    block_c[b] = acc.sum;
  });

  MatrixSum total_c(cdim);
  double total_w = 0.0;
  for (int b = 0; b < kBlocks; ++b) {
    total_c.add(block_c[b]);
    total_w += block_w[b];
  }
  std::vector<double> loo_p(kBlocks);
  std::vector<DenseMatrix> loo_c(kBlocks);
  for (int b = 0; b < kBlocks; ++b) {
    loo_c[b] = (total_c.sum - block_c[b]) / (total_w - block_w[b]);
    loo_p[b] = p_from_choi(loo_c[b], target_choi);
  }
  for (Eigen::Index i = 0; i < cdim; ++i) {
    for (Eigen::Index j = 0; j < cdim; ++j) {
      std::vector<double> re(kBlocks), im(kBlocks);
      for (int b = 0; b < kBlocks; ++b) {
        re[b] = loo_c[b](i, j).real();
        im[b] = loo_c[b](i, j).imag();
      }
      est.choi_stderr_re(i, j) = jackknife(re);
      est.choi_stderr_im(i, j) = jackknife(im);
    }
  }
  est.samples = samples;
  est.mean_weight = total_w / static_cast<double>(samples);
  finish(total_c.sum / total_w);
  est.stderr_p = jackknife(loo_p);
  return est;
}

ZetaCheck zeta_perturbation_check(const ProbeConfig& cfg, double zeta, long long samples,
                                  std::uint64_t seed, double scale) {
  if (!(zeta > 0.0 && zeta <= 0.5)) fail(ErrorCode::InvalidZeta, "zeta must lie in (0, 0.5]");
  if (!(scale >= 0.0 && scale <= 1.0)) fail(ErrorCode::InvalidParams, "scale must lie in [0, 1]");
  require_samples(samples);
  const StateVector psi_p = probe_state(cfg);
  const StateVector psi0 = measurement_seed_state(cfg);
  const double norm_sq = psi0.squaredNorm();

  // First computational basis vector with a usable component orthogonal to psi0.
  StateVector orth;
  for (Eigen::Index k = 0; k < psi0.size(); ++k) {
    StateVector e = StateVector::Zero(psi0.size());
    e(k) = 1.0;
    e -= psi0 * (psi0.dot(e) / norm_sq);
    if (e.norm() > 0.5) {
      orth = e / e.norm();
      break;
    }
  }
  const double sin_a = scale * zeta / (2.0 * norm_sq);
  const double cos_a = std::sqrt(1.0 - sin_a * sin_a);
  const StateVector psi0_tilde = cos_a * psi0 + sin_a * std::sqrt(norm_sq) * orth;

  ZetaCheck out;
  out.zeta = zeta;
  out.bound = zeta / 2.0;
  out.perturbation_trace_norm =
      trace_norm(psi0_tilde * psi0_tilde.adjoint() - psi0 * psi0.adjoint());

  const Eigen::Index cdim = kDim * kDim;
  std::vector<DenseMatrix> block_diff(kBlocks);
  parallel_for(kBlocks, [&](std::size_t b) {
    auto [lo, hi] = block_range(samples, static_cast<int>(b));
    MatrixSum acc(cdim);
    for (long long i = lo; i < hi; ++i) {
      const DenseMatrix u_hat = haar_unitary(kDim, sub_seed(seed, static_cast<std::uint64_t>(i)));
      const DenseMatrix w = tensor_power(u_hat.adjoint(), cfg.n);
      const double diff = std::norm(overlap(psi0_tilde, w, psi_p)) - std::norm(overlap(psi0, w, psi_p));
      acc.add(diff * choi_of_unitary(u_hat));
    }
    block_diff[b] = acc.sum;
  });
  MatrixSum total(cdim);
  for (const auto& m : block_diff) total.add(m);
  const DenseMatrix delta = total.sum / static_cast<double>(samples);
  out.deviation = 0.5 * trace_norm(0.5 * (delta + delta.adjoint())) / kDim;
  out.slack = out.bound - out.deviation;
  return out;
}

}  // namespace qprog
