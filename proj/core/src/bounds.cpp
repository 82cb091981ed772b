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

#include "qprog/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qprog/error.hpp"
#include "qprog/parallel.hpp"

namespace qprog {
namespace {

constexpr double kE = std::numbers::e;

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must lie in (0, 1]");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

double covering_log2_unitary(int d, double eps) {
  check_eps(eps);
  if (d < 1) fail(ErrorCode::InvalidParams, "d must be >= 1");
  return 2.0 * d * d * std::log2(12.0 / eps);
}

double covering_log2_brickwork(int n, int k, long long ell, double eps) {
  check_eps(eps);
  if (k < 1 || n < k) fail(ErrorCode::InvalidParams, "need N >= k >= 1");
  if (ell < 0) fail(ErrorCode::InvalidParams, "gate count must be >= 0");
  if (ell == 0) return 0.0;
  const double l = static_cast<double>(ell);
  const double placement = k * std::log2(kE * n / k);
  const double gate = std::ldexp(1.0, 2 * k + 1) * std::log2(12.0 * l / eps);
  return l * (placement + gate);
}

CostReport program_cost_upper(int n, int k, long long ell, double eps) {
  CostReport r;
  r.inputs = {{"N", n}, {"k", k}, {"ell", static_cast<double>(ell)}, {"eps", eps}};
  r.value_bits = covering_log2_brickwork(n, k, ell, eps);
  return r;
}

double lower_bound_offset() { return 5.0 + 1.0 / (2.0 * std::numbers::ln2); }

CostReport program_cost_lower(int n, double eps, double varpi, double kappa) {
  if (n < 1) fail(ErrorCode::PreconditionViolation, "N must be >= 1");
  if (!(eps > 0.0 && eps < 1.0 / 32.0)) {
    fail(ErrorCode::PreconditionViolation, "eps must lie in (0, 1/32)");
  }
  const double root = std::sqrt(2.0 * eps);
  const double varpi_max = 1.0 - 4.0 * root;
  if (!(varpi > 0.0 && varpi < varpi_max)) {
    fail(ErrorCode::PreconditionViolation,
         "varpi must lie in (0, 1 - 4 sqrt(2 eps)) = (0, " + fmt(varpi_max) + ")");
  }
  if (!(kappa > 0.0 && kappa < 1.0)) {
    fail(ErrorCode::PreconditionViolation, "kappa must lie in (0, 1)");
  }
  const double half = 1.0 - kappa / 2.0;
  const double prefactor = varpi * half * half * ((1.0 - varpi) / (4.0 * root) - 1.0);
  const double log_term = std::log2(4.0 * kE * root / (half * varpi)) + n;

  CostReport r;
  r.inputs = {{"N", n}, {"eps", eps}, {"varpi", varpi}, {"kappa", kappa}};
  r.value_bits = prefactor * log_term - lower_bound_offset();
  r.validity_notes.push_back(
      "kappa is only meaningful in the regime kappa = Omega(2^-polylog N); any value in (0,1) "
      "is accepted");
  if (r.value_bits < 0.0) r.validity_notes.push_back("trivial bound");
  return r;
}

LowerOptimum optimize_lower(int n, double eps, double kappa, int grid) {
  if (grid < 16) fail(ErrorCode::InvalidParams, "grid must be >= 16");
  if (!(eps > 0.0 && eps < 1.0 / 32.0)) {
    fail(ErrorCode::PreconditionViolation, "eps must lie in (0, 1/32)");
  }
  const double upper = 1.0 - 4.0 * std::sqrt(2.0 * eps);
  auto value = [&](double w) { return program_cost_lower(n, eps, w, kappa).value_bits; };

  int best_i = 1;
  double best = -INFINITY;
  for (int i = 1; i <= grid; ++i) {
    const double v = value(upper * i / (grid + 1));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double best_w = upper * best_i / (grid + 1);

  // Golden-section search on the bracket of the neighbouring grid points.
  double a = upper * (best_i - 1) / (grid + 1);
  double b = upper * (best_i + 1) / (grid + 1);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a);
  double x2 = a + g * (b - a);
  double f1 = value(x1);
  double f2 = value(x2);
  for (int iter = 0; iter < 100 && b - a > 1e-14; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = value(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = value(x1);
    }
  }
  const double refined = (a + b) / 2.0;
  if (refined > 0.0 && refined < upper && value(refined) > best) best_w = refined;

  LowerOptimum out;
  out.varpi = best_w;
  out.report = program_cost_lower(n, eps, best_w, kappa);
  out.report.inputs["grid"] = grid;
  return out;
}

GateCostEstimate mo_gate_complexity(long long d, long long n, double zeta, double tau,
                                    const GateCostConstants& constants) {
  if (d < 2 || (d & (d - 1)) != 0) fail(ErrorCode::InvalidParams, "d must be a power of two >= 2");
  if (n < 1) fail(ErrorCode::InvalidParams, "n must be >= 1");
  if (!(zeta > 0.0 && zeta <= 1.0)) fail(ErrorCode::InvalidParams, "zeta must lie in (0, 1]");
  if (!(tau > 0.0 && tau <= 1.0)) fail(ErrorCode::InvalidParams, "tau must lie in (0, 1]");
  for (double c : {constants.schur_transform, constants.state_prep, constants.tensor_generation,
                   constants.synthesis}) {
    if (!(c >= 0.0) || !std::isfinite(c)) fail(ErrorCode::InvalidParams, "constants must be >= 0");
  }
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  const double log_d = std::log2(dd);
  const double synth_log = std::log2(dd * dd / tau);

  GateCostEstimate g;
  g.constants = constants;
  g.schur_transform = constants.schur_transform * nn * nn * nn * log_d * std::log2(1.0 / zeta);
  g.state_prep = constants.state_prep * nn * log_d;
  g.tensor_generation = constants.tensor_generation * nn * dd * dd;
  g.synthesis = constants.synthesis * dd * dd * synth_log * synth_log * synth_log;
  g.total = g.schur_transform + g.state_prep + g.tensor_generation + g.synthesis;
  return g;
}

ErrorBudget mo_error_budget(double eps, double zeta, double tau, double delta) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidParams, "eps must lie in (0, 1]");
  for (double v : {zeta, tau, delta}) {
    if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::InvalidParams, "zeta, tau, delta must lie in [0, 1]");
  }
  return {eps, zeta, tau, delta, eps + zeta / 2.0 + delta / 2.0 + tau};
}

DesignRow design_row_from_string(std::string_view name) {
  for (DesignRow row : all_design_rows()) {
    if (to_string(row) == name) return row;
  }
  fail(ErrorCode::UnknownRow, "unknown design row '" + std::string(name) + "'");
}

std::string to_string(DesignRow row) {
  switch (row) {
    case DesignRow::harrow: return "harrow";
    case DesignRow::jeongwan: return "jeongwan";
    case DesignRow::metger_diamond: return "metger_diamond";
    case DesignRow::metger_relative: return "metger_relative";
    case DesignRow::chen: return "chen";
    case DesignRow::schuster: return "schuster";
  }
  fail(ErrorCode::UnknownRow, "unknown design row");
}

std::vector<DesignRow> all_design_rows() {
  return {DesignRow::harrow, DesignRow::jeongwan, DesignRow::metger_diamond,
          DesignRow::metger_relative, DesignRow::chen, DesignRow::schuster};
}

DesignDepth design_depth_bound(DesignRow row, int n, long long t, double rho,
                               const DesignExtra& extra) {
  if (!(rho > 0.0 && rho <= 1.0)) fail(ErrorCode::InvalidParams, "rho must lie in (0, 1]");
  if (t < 1) fail(ErrorCode::InvalidParams, "t must be >= 1");
  if (n < 1) fail(ErrorCode::InvalidParams, "N must be >= 1");
  const double tt = static_cast<double>(t);
  const double nn = static_cast<double>(n);
  const double log_rho = std::log2(1.0 / rho);
  const double log7_t = std::pow(std::log2(tt), 7);

  DesignDepth out;
  switch (row) {
    case DesignRow::harrow:
      if (!(extra.lattice_dim >= 1.0)) fail(ErrorCode::InvalidParams, "lattice_dim must be >= 1");
      out.depth = (tt + log_rho) * std::pow(nn, 1.0 / extra.lattice_dim);
      out.condition = "architecture is a lattice of the given dimension";
      break;
    case DesignRow::jeongwan:
      out.depth = (nn * tt * tt + tt * log_rho) * std::log2(nn);
      out.condition = "none";
      break;
    case DesignRow::metger_diamond:
      out.depth = tt * nn + tt * log_rho;
      out.valid = tt <= std::exp2(nn / 4.0);
      out.condition = "t <= 2^(N/4)";
      break;
    case DesignRow::metger_relative:
      out.depth = tt * tt * nn + tt * tt * log_rho;
      out.valid = tt <= std::exp2(nn / 4.0);
      out.condition = "t <= 2^(N/4)";
      break;
    case DesignRow::chen:
      out.depth = (nn * tt + log_rho) * log7_t;
      out.valid = tt <= std::exp2(2.0 * nn / 5.0);
      out.condition = "t <= 2^(2N/5)";
      break;
    case DesignRow::schuster:
      out.depth = (extra.xi * tt + std::log2(nn / rho)) * log7_t;
      out.valid = extra.xi >= 1.0 && tt <= std::exp2(2.0 * extra.xi / 5.0);
      out.condition = "xi >= 1 and t <= 2^(2 xi/5)";
      break;
  }
  return out;
}

std::vector<TightnessPoint> tightness_sweep(int log2_min, int log2_max, double kappa, int grid) {
  if (log2_min < 2 || log2_max < log2_min || log2_max > 30) {
    fail(ErrorCode::InvalidParams, "sweep exponents must satisfy 2 <= a <= b <= 30");
  }
  std::vector<TightnessPoint> points(static_cast<std::size_t>(log2_max - log2_min + 1));
  parallel_for(points.size(), [&](std::size_t i) {
    const int a = log2_min + static_cast<int>(i);
    const int n = 1 << a;
    const double log_sq = static_cast<double>(a) * a;
    TightnessPoint p;
    p.n = n;
    p.depth = static_cast<int>(std::ceil(log_sq));
    p.ell = static_cast<long long>(n) * p.depth / 2;
    p.eps = 1.0 / log_sq;
    const LowerOptimum lo = optimize_lower(n, p.eps, kappa, grid);
    p.varpi = lo.varpi;
    p.lower_bits = lo.report.value_bits;
    p.upper_bits = program_cost_upper(n, 2, p.ell, p.eps).value_bits;
    p.lower_ratio = p.lower_bits / (n * log_sq);
    p.upper_ratio = p.upper_bits / (n * log_sq);
    points[i] = p;
  });
  return points;
}

}  // namespace qprog
