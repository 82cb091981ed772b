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

#include "qprog/matrixcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qprog/error.hpp"

namespace qprog {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_square(const DenseMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + " must be square");
  }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch,
         "shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " differ");
  }
}

void require_density(const DenseMatrix& rho) {
  require_square(rho, "density matrix");
  if (!is_hermitian(rho)) fail(ErrorCode::NotDensity, "matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kDensityTolerance) {
    fail(ErrorCode::NotDensity, "trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
    fail(ErrorCode::NotDensity, "matrix has a negative eigenvalue");
  }
}

Eigen::VectorXd singular_values(const DenseMatrix& a) {
  if (a.rows() <= 16 && a.cols() <= 16) {
    return Eigen::JacobiSVD<DenseMatrix>(a).singularValues();
  }
  return Eigen::BDCSVD<DenseMatrix>(a).singularValues();
}

// Shortest arc containing every angle (angles in [0, 2pi), sorted).
double covering_arc(const std::vector<double>& phases) {
  if (phases.size() <= 1) return 0.0;
  double largest_gap = kTwoPi - (phases.back() - phases.front());
  for (std::size_t i = 1; i < phases.size(); ++i) {
    largest_gap = std::max(largest_gap, phases[i] - phases[i - 1]);
  }
  return std::max(0.0, kTwoPi - largest_gap);
}

}  // namespace

bool is_unitary(const DenseMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) return false;
  const DenseMatrix defect =
      u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols());
  return operator_norm(defect) <= tol;
}

bool is_hermitian(const DenseMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DenseMatrix haar_unitary(int d, std::uint64_t seed) {
  if (d < 1) fail(ErrorCode::InvalidParams, "dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  DenseMatrix ginibre(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) ginibre(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<DenseMatrix> qr(ginibre);
  DenseMatrix q = qr.householderQ();
  const DenseMatrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    const Complex phase = mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

double operator_norm(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double trace_norm(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a).sum();
}

double trace_distance(const DenseMatrix& rho, const DenseMatrix& sigma) {
  require_same_shape(rho, sigma);
  require_square(rho, "state");
  if (!is_hermitian(rho) || !is_hermitian(sigma)) {
    fail(ErrorCode::NotHermitian, "trace_distance requires Hermitian inputs");
  }
  const DenseMatrix delta = rho - sigma;
  const DenseMatrix sym = 0.5 * (delta + delta.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

std::vector<double> eigenphases(const DenseMatrix& u) {
  require_square(u, "unitary");
  Eigen::ComplexEigenSolver<DenseMatrix> solver(u, false);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::Numeric, "eigenvalue iteration did not converge");
  }
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double angle = std::arg(solver.eigenvalues()(i));
    if (angle < 0.0) angle += kTwoPi;
    if (angle >= kTwoPi) angle -= kTwoPi;
    phases.push_back(angle);
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

double eigenphase_arc(const DenseMatrix& u, const DenseMatrix& v) {
  require_same_shape(u, v);
  return covering_arc(eigenphases(u.adjoint() * v));
}

double diamond_distance_unitary(const DenseMatrix& u, const DenseMatrix& v) {
  require_same_shape(u, v);
  if (!is_unitary(u, 1e-9) || !is_unitary(v, 1e-9)) {
    fail(ErrorCode::NotUnitary, "diamond_distance_unitary requires unitary inputs");
  }
  const double arc = eigenphase_arc(u, v);
  // The hull contains the origin once the spectrum spans a half circle.
  if (arc >= std::numbers::pi) return 2.0;
  return std::min(2.0, 2.0 * std::sin(0.5 * arc));
}

double phase_optimized_distance(const DenseMatrix& u, const DenseMatrix& v) {
  require_same_shape(u, v);
  const double arc = eigenphase_arc(u, v);
  return 2.0 * std::sin(0.25 * arc);
}

double von_neumann_entropy(const DenseMatrix& rho) {
  require_density(rho);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(0.5 * (rho + rho.adjoint()),
                                                    Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > kEigenClip) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

Ensemble::Ensemble(Kind kind, std::vector<Member> members)
    : kind_(kind), members_(std::move(members)) {
  if (members_.empty()) fail(ErrorCode::InvalidParams, "ensemble is empty");
  double total = 0.0;
  const auto dim = members_.front().matrix.rows();
  for (const auto& m : members_) {
    if (!(m.weight >= 0.0)) fail(ErrorCode::InvalidParams, "negative ensemble weight");
    if (m.matrix.rows() != dim || m.matrix.cols() != dim) {
      fail(ErrorCode::DimensionMismatch, "ensemble members differ in dimension");
    }
    if (kind_ == Kind::states) {
      require_density(m.matrix);
    } else if (!is_unitary(m.matrix, 1e-9)) {
      fail(ErrorCode::NotUnitary, "ensemble member is not unitary");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    fail(ErrorCode::InvalidParams, "ensemble weights must sum to 1");
  }
}

int Ensemble::dimension() const { return static_cast<int>(members_.front().matrix.rows()); }

DenseMatrix Ensemble::average() const {
  DenseMatrix avg = DenseMatrix::Zero(dimension(), dimension());
  for (const auto& m : members_) avg += m.weight * m.matrix;
  return avg;
}

double holevo_information(const Ensemble& ensemble) {
  if (ensemble.kind() != Ensemble::Kind::states) {
    fail(ErrorCode::NotDensity, "Holevo information needs an ensemble of states");
  }
  DenseMatrix avg = ensemble.average();
  avg = 0.5 * (avg + avg.adjoint());
  double mean_entropy = 0.0;
  for (const auto& m : ensemble.members()) {
    if (m.weight > 0.0) mean_entropy += m.weight * von_neumann_entropy(m.matrix);
  }
  return von_neumann_entropy(avg) - mean_entropy;
}

double afw_slack(const DenseMatrix& rho, const DenseMatrix& sigma, int subspace_dim) {
  if (subspace_dim < 1) fail(ErrorCode::InvalidParams, "subspace dimension must be >= 1");
  const double s_rho = von_neumann_entropy(rho);
  const double s_sigma = von_neumann_entropy(sigma);
  const double bound =
      std::log(static_cast<double>(subspace_dim)) * trace_distance(rho, sigma) + std::log(2.0);
  return bound - std::abs(s_rho - s_sigma);
}

DenseMatrix pauli_matrix(PauliAxis axis) {
  DenseMatrix p(2, 2);
  const Complex i(0.0, 1.0);
  switch (axis) {
    case PauliAxis::X: p << 0.0, 1.0, 1.0, 0.0; break;
    case PauliAxis::Y: p << 0.0, -i, i, 0.0; break;
    case PauliAxis::Z: p << 1.0, 0.0, 0.0, -1.0; break;
  }
  return p;
}

char to_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

PauliAxis pauli_axis_from_char(char c) {
  switch (c) {
    case 'X': case 'x': return PauliAxis::X;
    case 'Y': case 'y': return PauliAxis::Y;
    case 'Z': case 'z': return PauliAxis::Z;
    default: break;
  }
  fail(ErrorCode::InvalidParams, std::string("unknown Pauli axis '") + c + "'");
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void check_support(std::span<const int> support, int n) {
  for (std::size_t a = 0; a < support.size(); ++a) {
    if (support[a] < 0 || support[a] >= n) {
      fail(ErrorCode::InvalidParams, "qubit " + std::to_string(support[a]) + " out of range");
    }
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      if (support[a] == support[b]) fail(ErrorCode::InvalidParams, "support repeats a qubit");
    }
  }
}

}  // namespace

void apply_gate_left(DenseMatrix& target, const DenseMatrix& gate,
                     std::span<const int> support, int n) {
  const int k = static_cast<int>(support.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index local = Eigen::Index{1} << k;
  if (target.rows() != dim) fail(ErrorCode::DimensionMismatch, "target has wrong row count");
  if (gate.rows() != local || gate.cols() != local) {
    fail(ErrorCode::DimensionMismatch, "gate dimension does not match its support");
  }
  check_support(support, n);

  std::vector<Eigen::Index> offsets(static_cast<std::size_t>(local), 0);
  Eigen::Index mask = 0;
  for (int j = 0; j < k; ++j) mask |= Eigen::Index{1} << (n - 1 - support[j]);
  for (Eigen::Index l = 0; l < local; ++l) {
    Eigen::Index off = 0;
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1) off |= Eigen::Index{1} << (n - 1 - support[j]);
    }
    offsets[static_cast<std::size_t>(l)] = off;
  }

  Eigen::VectorXcd in(local);
  Eigen::VectorXcd out(local);
  for (Eigen::Index col = 0; col < target.cols(); ++col) {
    for (Eigen::Index base = 0; base < dim; ++base) {
      if (base & mask) continue;
      for (Eigen::Index l = 0; l < local; ++l) in(l) = target(base + offsets[l], col);
      out.noalias() = gate * in;
      for (Eigen::Index l = 0; l < local; ++l) target(base + offsets[l], col) = out(l);
    }
  }
}

DenseMatrix embed_gate(const DenseMatrix& gate, std::span<const int> support, int n) {
  DenseMatrix full = DenseMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  apply_gate_left(full, gate, support, n);
  return full;
}

DenseMatrix pauli_string_matrix(PauliAxis axis, std::span<const int> support, int n) {
  if (n < 1 || n > kMaxPauliQubits) {
    fail(ErrorCode::TooLarge, "Pauli strings are limited to 1..10 qubits");
  }
  check_support(support, n);
  DenseMatrix out = DenseMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  const DenseMatrix p = pauli_matrix(axis);
  for (int q : support) {
    const int single[1] = {q};
    apply_gate_left(out, p, single, n);
  }
  return out;
}

DenseMatrix pauli_rotation(PauliAxis axis, std::span<const int> support, double theta, int n) {
  const DenseMatrix p = pauli_string_matrix(axis, support, n);
  const DenseMatrix id = DenseMatrix::Identity(p.rows(), p.cols());
  return std::cos(theta) * id + Complex(0.0, std::sin(theta)) * p;
}

DenseMatrix apply_channel_depolarizing(const DenseMatrix& rho, const DenseMatrix& u, double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::InvalidP, "p must lie in [0, 1]");
  require_square(rho, "state");
  require_same_shape(rho, u);
  if (!is_unitary(u, 1e-9)) fail(ErrorCode::NotUnitary, "channel unitary is not unitary");
  const auto d = rho.rows();
  const DenseMatrix mixed = DenseMatrix::Identity(d, d) * (rho.trace() / static_cast<double>(d));
  return p * (u * rho * u.adjoint()) + (1.0 - p) * mixed;
}

DenseMatrix choi_of(const ChannelFn& channel, int d) {
  if (d < 1) fail(ErrorCode::InvalidParams, "dimension must be >= 1");
  DenseMatrix choi = DenseMatrix::Zero(d * d, d * d);
  DenseMatrix basis = DenseMatrix::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      basis.setZero();
      basis(m, n) = 1.0;
      const DenseMatrix image = channel(basis);
      if (image.rows() != d || image.cols() != d) {
        fail(ErrorCode::DimensionMismatch, "channel output has the wrong dimension");
      }
      choi.block(m * d, n * d, d, d) = image;
    }
  }
  return choi;
}

DenseMatrix choi_of_unitary(const DenseMatrix& u) {
  require_square(u, "unitary");
  const auto d = u.rows();
  StateVector vec(d * d);
  for (Eigen::Index m = 0; m < d; ++m) vec.segment(m * d, d) = u.col(m);
  return vec * vec.adjoint();
}

DenseMatrix density_of(const StateVector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) fail(ErrorCode::InvalidParams, "zero state vector");
  const StateVector unit = psi / norm;
  return unit * unit.adjoint();
}

}  // namespace qprog
