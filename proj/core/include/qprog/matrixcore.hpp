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

// Dense complex linear algebra and quantum-information primitives.
//
// Conventions used throughout the library:
//  * Tensor factor 0 is the most significant bit of a basis index.
//  * Entropies are in nats. Conversions to bits happen at report boundaries.
//  * diamond_distance_unitary returns the full norm ||U(.)U^+ - V(.)V^+||_diamond
//    in [0, 2]; callers that want the "half" distance divide by two.
//  * Channel-level comparisons ignore global phase; plain matrix norms never do.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qprog {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kEigenClip = 1e-14;

bool is_unitary(const DenseMatrix& u, double tol = kUnitaryTolerance);
bool is_hermitian(const DenseMatrix& a, double tol = kDensityTolerance);

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases of diag(R) folded back into Q.
DenseMatrix haar_unitary(int d, std::uint64_t seed);

/// Largest singular value.
double operator_norm(const DenseMatrix& a);

/// Sum of singular values.
double trace_norm(const DenseMatrix& a);

/// Half the trace norm of rho - sigma. Both inputs must be Hermitian.
double trace_distance(const DenseMatrix& rho, const DenseMatrix& sigma);

/// Eigenphases of a unitary in [0, 2*pi), sorted ascending.
std::vector<double> eigenphases(const DenseMatrix& u);

/// Length of the shortest arc of the unit circle containing all eigenvalues
/// of u^+ v.
double eigenphase_arc(const DenseMatrix& u, const DenseMatrix& v);

/// Exact diamond distance between the channels of two unitaries:
/// 2 sqrt(1 - nu^2) with nu the distance from 0 to the convex hull of the
/// spectrum of U^+ V.
double diamond_distance_unitary(const DenseMatrix& u, const DenseMatrix& v);

/// min over phi of ||U - e^{i phi} V||, evaluated from the eigenphase arc.
double phase_optimized_distance(const DenseMatrix& u, const DenseMatrix& v);

double von_neumann_entropy(const DenseMatrix& rho);

/// Weighted collection of density matrices or unitaries.
class Ensemble {
 public:
  enum class Kind { states, unitaries };

  struct Member {
    double weight;
    DenseMatrix matrix;
  };

  /// Validates weights (non-negative, sum 1 +- 1e-12) and members (unit trace
  /// PSD densities, or unitaries).
  Ensemble(Kind kind, std::vector<Member> members);

  Kind kind() const { return kind_; }
  const std::vector<Member>& members() const { return members_; }
  int dimension() const;
  DenseMatrix average() const;

 private:
  Kind kind_;
  std::vector<Member> members_;
};

/// chi = S(sum_x w_x rho_x) - sum_x w_x S(rho_x), in nats.
double holevo_information(const Ensemble& ensemble);

/// Slack of the Alicki-Fannes-Winter continuity bound:
/// ln(subspace_dim) * d_Tr(rho, sigma) + ln 2 - |S(rho) - S(sigma)|.
/// The subspace dimension is trusted as given.
double afw_slack(const DenseMatrix& rho, const DenseMatrix& sigma, int subspace_dim);

enum class PauliAxis { X, Y, Z };

DenseMatrix pauli_matrix(PauliAxis axis);
char to_char(PauliAxis axis);
PauliAxis pauli_axis_from_char(char c);

inline constexpr int kMaxPauliQubits = 10;

/// prod_{j in support} P_j on n qubits.
DenseMatrix pauli_string_matrix(PauliAxis axis, std::span<const int> support, int n);

/// exp(i theta P_string) = cos(theta) I + i sin(theta) P_string.
DenseMatrix pauli_rotation(PauliAxis axis, std::span<const int> support, double theta, int n);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Left-multiplies `target` (2^n rows) by the k-local gate acting on the
/// ordered `support`. Gate row/column index bit j (MSB first) is qubit support[j].
void apply_gate_left(DenseMatrix& target, const DenseMatrix& gate,
                     std::span<const int> support, int n);

/// Full 2^n x 2^n operator of a k-local gate.
DenseMatrix embed_gate(const DenseMatrix& gate, std::span<const int> support, int n);

/// p * U rho U^+ + (1 - p) * I/d.
DenseMatrix apply_channel_depolarizing(const DenseMatrix& rho, const DenseMatrix& u, double p);

using ChannelFn = std::function<DenseMatrix(const DenseMatrix&)>;

/// Unnormalized Choi matrix sum_{m,n} |m><n| (x) E(|m><n|), input factor first.
/// Trace equals d for trace-preserving channels; the identity channel gives
/// d |Phi+><Phi+|.
DenseMatrix choi_of(const ChannelFn& channel, int d);

/// Choi matrix of rho -> U rho U^+, i.e. |U>><<U| with |U>> = sum_m |m> (x) U|m>.
DenseMatrix choi_of_unitary(const DenseMatrix& u);

/// Normalizes a pure state vector to a density matrix |psi><psi|.
DenseMatrix density_of(const StateVector& psi);

}  // namespace qprog
