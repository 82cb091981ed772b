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
// Monte-Carlo simulation of the measure-and-operate programming channel for
// qubits (d = 2) with n = 1 or 2 copies.
//
// Registers are ordered S1 .. Sn R1 .. Rn: the n system qubits the unknown
// unitary acts on, followed by n reference qubits. The Schur basis of two
// qubits is the real triplet {|00>, (|01>+|10>)/sqrt2, |11>} and the singlet
// (|01>-|10>)/sqrt2; every multiplicity space is one-dimensional.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qprog/matrixcore.hpp"
#include "qprog/repr.hpp"

namespace qprog {

struct ProbeConfig {
  int n = 1;
  /// Weights over partitions(n, 2) in their listed order; empty means uniform.
  std::vector<double> q;
};

/// Partitions carrying weight, with the validated weight vector.
struct ProbeBlocks {
  std::vector<Partition> shapes;
  std::vector<double> weights;
};

/// Checks n in {1, 2} (UnsupportedN) and the weights (InvalidParams).
ProbeBlocks probe_blocks(const ProbeConfig& cfg);

/// sum_lambda sqrt(q_lambda) |Phi+_{W_lambda}> (x) |eta_lambda>, normalized.
StateVector probe_state(const ProbeConfig& cfg);

/// sum_lambda dim W_lambda |Phi+_{W_lambda}> (x) |eta_lambda> over the blocks
/// with q_lambda > 0. Not normalized.
StateVector measurement_seed_state(const ProbeConfig& cfg);

enum class UnitaryEnsemble { haar, clifford };
UnitaryEnsemble ensemble_from_string(std::string_view name);
std::string to_string(UnitaryEnsemble ensemble);

/// The 24 single-qubit Clifford unitaries modulo phase, identity first.
const std::vector<DenseMatrix>& clifford_group();

struct MOEstimate {
  double p_hat = 0.0;
  double stderr_p = 0.0;
  long long samples = 0;
  UnitaryEnsemble ensemble = UnitaryEnsemble::haar;
  DenseMatrix choi_hat;            // unnormalized, trace 2
  Eigen::MatrixXd choi_stderr_re;  // entrywise jackknife errors
  Eigen::MatrixXd choi_stderr_im;
  double mean_weight = 0.0;   // Monte-Carlo mean of the acceptance weight
  double fit_residual = 0.0;  // trace norm of choi_hat - model(p_hat)
  double fit_tolerance = 0.0;
};

/// p = (E |sum_lambda sqrt(q_lambda) sum_{gamma in lambda (x) box}
///       chi_gamma(U_hat U^+)|^2 - 1) / 3.
/// Haar: Monte Carlo with a 32-block jackknife error. Clifford: the exact
/// average over the group, stderr 0.
MOEstimate estimate_p(const DenseMatrix& u, const ProbeConfig& cfg, long long samples,
                      UnitaryEnsemble ensemble, std::uint64_t seed);

/// Builds the channel rho -> E[ Tr(eta_Uhat psi_{P,U}) Uhat rho Uhat^+ ] from
/// explicit state vectors and accumulates its Choi matrix. The estimate is
/// normalized by the mean acceptance weight; p_hat comes from the entanglement
/// fidelity with U.
MOEstimate simulate_mo_channel(const DenseMatrix& u, const ProbeConfig& cfg, long long samples,
                               UnitaryEnsemble ensemble, std::uint64_t seed);

struct ZetaCheck {
  double zeta = 0.0;
  double perturbation_trace_norm = 0.0;  // || psi0~ - psi0 ||_1 of the projectors
  double deviation = 0.0;                // half trace distance of the Choi states
  double bound = 0.0;                    // zeta / 2
  double slack = 0.0;                    // bound - deviation
};

/// Rotates psi0 toward a fixed orthogonal direction so the perturbed projector
/// sits at trace-norm distance `scale * zeta`, and compares the two
/// measure-and-operate channels for U = I with common random numbers.
ZetaCheck zeta_perturbation_check(const ProbeConfig& cfg, double zeta, long long samples,
                                  std::uint64_t seed, double scale = 1.0);

}  // namespace qprog
