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
// Epsilon-nets over local unitary groups, the postselection processor and
// whole-circuit programming with cost accounting.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qprog/circuit.hpp"
#include "qprog/matrixcore.hpp"

namespace qprog {

enum class NetConstruction { grid, sampled };

struct CoverageCertificate {
  long long verified_samples = 0;
  double max_observed_gap = 0.0;
};

/// A finite set of 2^k x 2^k unitaries. Grid nets over U(2) are implicit:
/// elements are generated from their index and never stored.
class EpsilonNet {
 public:
  int locality() const { return locality_; }
  double target_eps() const { return target_eps_; }
  NetConstruction construction() const { return construction_; }
  /// True only for grid nets, whose covering radius is guaranteed.
  bool certified() const { return construction_ == NetConstruction::grid; }
  const CoverageCertificate& certificate() const { return certificate_; }
  std::uint64_t size() const;
  double log2_size() const;
  DenseMatrix element(std::uint64_t t) const;
  /// Index of the closest element in diamond distance and that distance;
  /// ties go to the lowest index.
  std::pair<std::uint64_t, double> nearest(const DenseMatrix& u) const;

  /// Grid parameters: alpha/gamma steps, beta intervals.
  std::uint64_t grid_alpha_steps() const { return alpha_steps_; }
  std::uint64_t grid_beta_steps() const { return beta_steps_; }

 private:
  friend EpsilonNet build_net_u2(double, long long, std::uint64_t);
  friend EpsilonNet build_net_sampled(int, double, long long, std::uint64_t, long long);

  struct Angles {
    double alpha, beta, gamma;
  };
  Angles grid_angles(std::uint64_t t) const;

  int locality_ = 1;
  double target_eps_ = 1.0;
  NetConstruction construction_ = NetConstruction::grid;
  CoverageCertificate certificate_;
  std::uint64_t alpha_steps_ = 0;
  std::uint64_t beta_steps_ = 0;
  std::vector<DenseMatrix> elements_;
};

/// Diamond distance between two single-qubit unitary channels in closed form.
double qubit_diamond_distance(const DenseMatrix& u, const DenseMatrix& v);

/// Z-Y-Z Euler grid over U(2) modulo phase. The angle pitch
/// h = (4/3) arcsin(eps/2) keeps the rotation angle between any unitary and
/// its rounded grid point below 2 arcsin(eps/2), i.e. diamond distance <= eps.
/// Element 0 is the identity. The certificate audits `audit_samples` Haar
/// unitaries.
EpsilonNet build_net_u2(double eps, long long audit_samples = 1024,
                        std::uint64_t audit_seed = 0x5eed);

/// `budget` Haar-random elements of U(2^k), k in {1, 2}. The certificate is an
/// empirical audit only; the net is not a certified eps-cover.
EpsilonNet build_net_sampled(int k, double eps, long long budget, std::uint64_t seed,
                             long long audit_samples = 256);

/// Largest nearest-element distance over the given unitaries.
double audit_coverage(const EpsilonNet& net, const std::vector<DenseMatrix>& samples);

/// Nearest element and its diamond distance.
std::pair<std::uint64_t, double> program_state_for(const DenseMatrix& u, const EpsilonNet& net);

/// C(rho (x) |t><t|) = U_t rho U_t^+.
DenseMatrix apply_processor(const DenseMatrix& rho, std::uint64_t t, const EpsilonNet& net);

/// Diagonal program sum_t p_t |t><t|: the processor acts as sum_t p_t U_t rho U_t^+.
DenseMatrix apply_processor_mixed(const DenseMatrix& rho,
                                  const std::vector<std::pair<std::uint64_t, double>>& program,
                                  const EpsilonNet& net);

/// Ordered k-tuples of distinct qubits whose induced subgraph is connected.
std::vector<std::vector<int>> valid_supports(const ConnectivityGraph& graph, int k);

struct GateProgram {
  std::uint64_t location = 0;  // layer * |Q| + support index, written in m bits
  std::uint64_t net_index = 0;
  double gap = 0.0;
};

struct ProgramState {
  int location_bits = 0;  // m
  std::uint64_t support_count = 0;
  std::vector<GateProgram> gates;
};

/// Decodes a location code into (layer, support).
std::pair<int, std::vector<int>> decode_location(const ConnectivityGraph& graph, int k,
                                                 const ProgramState& program,
                                                 std::uint64_t location);

struct ProgrammedCircuit {
  ProgramState program;
  std::shared_ptr<const EpsilonNet> net;
  double per_gate_eps = 0.0;
  double total_cost_bits = 0.0;  // l (m + log2 |net|)
  double achieved_error = 0.0;   // dense diamond distance; NaN if skipped
  double gap_sum = 0.0;
};

/// Programs every gate against a net of radius eps / l. k = 1 builds a grid
/// net; k = 2 requires a caller-supplied certified net with radius <= eps / l.
/// The dense check of achieved_error needs N <= 10.
ProgrammedCircuit program_circuit(const BrickworkCircuit& circuit, double eps,
                                  std::shared_ptr<const EpsilonNet> net = nullptr,
                                  bool dense_check = true);

/// Perturbs each gate by an independent random unitary within per_gate_eps of
/// the identity in diamond distance and returns the largest ratio of the
/// whole-circuit diamond distance to l * per_gate_eps over the trials.
double verify_error_propagation(const BrickworkCircuit& circuit, double per_gate_eps,
                                int trials, std::uint64_t seed);

}  // namespace qprog
