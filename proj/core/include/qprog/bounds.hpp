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

#pragma once
// Closed-form resource bounds: covering numbers, program-cost upper and
// lower bounds, the measure-and-operate cost model and design depths.
//
// All bit-valued results are base-2 logarithms. Asymptotic terms are frozen
// with unit constants; the multipliers in GateCostConstants and the exponent
// constant of the design rows are knobs, not derived quantities.

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qprog {

struct CostReport {
  double value_bits = 0.0;
  std::map<std::string, double> inputs;
  bool valid = true;
  std::vector<std::string> validity_notes;
};

/// 2 d^2 log2(12 / eps): log2 of the covering number of U(d).
double covering_log2_unitary(int d, double eps);

/// l [k log2(eN/k) + 2^{2k+1} log2(12 l / eps)]: log2 of the covering number
/// of depth-limited brickwork circuits with l gates.
double covering_log2_brickwork(int n, int k, long long ell, double eps);

/// Upper bound on the program cost of an eps-universal processor for the
/// brickwork family. Equal to covering_log2_brickwork by construction.
CostReport program_cost_upper(int n, int k, long long ell, double eps);

/// Constant subtracted in the lower bound: 5 + 1/(2 ln 2).
double lower_bound_offset();

/// varpi (1-kappa/2)^2 ((1-varpi)/(4 sqrt(2 eps)) - 1)
///   * log2(4e sqrt(2 eps) 2^N / ((1-kappa/2) varpi)) - c0.
/// Preconditions: 0 < eps < 1/32, 0 < varpi < 1 - 4 sqrt(2 eps),
/// 0 < kappa < 1. Negative values are returned as-is with a note.
CostReport program_cost_lower(int n, double eps, double varpi, double kappa);

struct LowerOptimum {
  double varpi = 0.0;
  CostReport report;
};

/// Maximizes program_cost_lower over varpi: uniform grid of `grid` interior
/// points, then a golden-section pass around the best grid point.
LowerOptimum optimize_lower(int n, double eps, double kappa, int grid);

struct GateCostConstants {
  double schur_transform = 1.0;
  double state_prep = 1.0;
  double tensor_generation = 1.0;
  double synthesis = 1.0;
};

struct GateCostEstimate {
  double schur_transform = 0.0;
  double state_prep = 0.0;
  double tensor_generation = 0.0;
  double synthesis = 0.0;
  double total = 0.0;
  GateCostConstants constants;
};

/// Gate counts of the measure-and-operate scheme under the model
///   schur = n^3 log2 d log2(1/zeta), prep = n log2 d,
///   tensor = n d^2,                  synthesis = d^2 log2^3(d^2 / tau).
/// The Schur-transform exponent is a model choice.
GateCostEstimate mo_gate_complexity(long long d, long long n, double zeta, double tau,
                                    const GateCostConstants& constants = {});

struct ErrorBudget {
  double epsilon = 0.0;
  double zeta = 0.0;
  double tau = 0.0;
  double delta = 0.0;
  double epsilon_mo = 0.0;
};

/// eps_MO = eps + zeta/2 + delta/2 + tau. eps must lie in (0, 1]; the three
/// implementation errors may be zero.
ErrorBudget mo_error_budget(double eps, double zeta, double tau, double delta);

enum class DesignRow { harrow, jeongwan, metger_diamond, metger_relative, chen, schuster };

DesignRow design_row_from_string(std::string_view name);
std::string to_string(DesignRow row);
std::vector<DesignRow> all_design_rows();

struct DesignExtra {
  double lattice_dim = 1.0;  // harrow: the lattice dimension of the architecture
  double xi = 1.0;           // schuster: patch-size parameter, >= 1
};

struct DesignDepth {
  double depth = 0.0;
  bool valid = true;
  std::string condition;
};

/// Depth of a rho-approximate unitary t-design on N qubits for one row of the
/// construction table, unit constants, with the row's condition evaluated as a
/// plain inequality.
DesignDepth design_depth_bound(DesignRow row, int n, long long t, double rho,
                               const DesignExtra& extra = {});

struct TightnessPoint {
  int n = 0;
  int depth = 0;
  long long ell = 0;
  double eps = 0.0;
  double varpi = 0.0;
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  double lower_ratio = 0.0;  // lower / (N log2^2 N)
  double upper_ratio = 0.0;  // upper / (N log2^2 N)
};

/// The scaling sweep N = 2^a ... 2^b with D = ceil(log2^2 N), l = N D / 2,
/// k = 2, eps = 1/log2^2 N and the given kappa. Evaluated in parallel.
std::vector<TightnessPoint> tightness_sweep(int log2_min, int log2_max, double kappa = 0.5,
                                            int grid = 256);

}  // namespace qprog
