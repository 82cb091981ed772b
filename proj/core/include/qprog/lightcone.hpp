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
// Light-cone decomposition of brickwork circuits, same-axis Pauli merging and
// the program-cost trade-off formulas that go with them.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qprog/circuit.hpp"

namespace qprog {

enum class ConeKind { forward, backward };
std::string to_string(ConeKind kind);

struct LightCone {
  std::vector<std::size_t> gate_indices;  // ascending layer, then slot index
  std::vector<int> support;               // sorted union of member supports
  int first_layer = 0;
  int depth = 0;  // layers spanned
  ConeKind kind = ConeKind::forward;

  int width() const { return static_cast<int>(support.size()); }
};

struct LightConeDecomposition {
  int window = 1;
  std::vector<LightCone> cones;
  std::vector<std::size_t> execution_order;  // indices into cones
};

/// Splits the layers into consecutive bands of W. Even bands hold forward
/// cones: every gate of the band's first layer seeds a cone, and later gates
/// join the lowest-indexed cone whose support they touch. Odd bands hold
/// backward cones grown the same way from the band's last layer downwards.
/// A gate touching no existing cone of its band opens a new one.
LightConeDecomposition decompose(const BrickworkCircuit& circuit, int w);

struct DecompositionCheck {
  double unitary_gap = 0.0;  // NaN when the dense check was skipped
  bool disjoint = false;     // every gate in exactly one cone
  bool order_ok = false;     // replay respects the per-qubit gate order
};

/// Checks a decomposition. The dense replay needs N <= 10; pass dense=false
/// to check only the combinatorial properties.
DecompositionCheck verify_decomposition(const BrickworkCircuit& circuit,
                                        const LightConeDecomposition& dec, bool dense = true);

/// Slot indices in replay order.
std::vector<std::size_t> replay_order(const LightConeDecomposition& dec);

struct TradeoffConstants {
  double exponent = 1.0;   // c in 2^{cW}
  double primitive = 1.0;  // multiplier on c_P
  double reduced = 1.0;    // multiplier on c_P^r
};

struct ConeCost {
  long long distinct_supports = 0;  // T
  int width = 0;                    // k_L
  long long gates = 0;              // m_L
  double bits = 0.0;
};

struct TradeoffReport {
  double primitive_bits = 0.0;
  double reduced_bits = 0.0;
  bool reduced_is_cheaper = false;
  std::vector<ConeCost> per_cone;
  std::map<std::string, double> parameters;
};

/// c_P   = N D log2 N + N D log2(N D / eps)
/// c_P^r = (N D / W) log2(N / W) + 2^{cW} (N D / W^2) log2(N D / (W^2 eps))
TradeoffReport generic_tradeoff(long long n, long long depth, long long w, double eps,
                                const TradeoffConstants& constants = {});

struct GenericSweepPoint {
  long long n = 0;
  long long w = 0;
  double primitive_bits = 0.0;
  double reduced_bits = 0.0;
  double ratio = 0.0;
};

/// generic_tradeoff over N = 2^a ... 2^b with W = D = ceil(log2^2 N).
std::vector<GenericSweepPoint> generic_tradeoff_sweep(int log2_min, int log2_max, double eps,
                                                      const TradeoffConstants& constants = {});

/// Merges same-axis Pauli rotations that share a support (as a set): one output
/// per distinct support, angles summed mod 2 pi, in order of first appearance.
/// Supports are emitted sorted. Throws MixedAxes if the axes differ.
std::vector<GateSlot> merge_pauli_cone(const std::vector<GateSlot>& gates);

/// Sum_j [T_j log2(2 pi h T_j / eps) + T_j k_j log2(e N / k_j)] against
/// l [log2(2 pi l / eps) + k log2(e N / k)]. Only T_j and k_j of each cone enter.
TradeoffReport structured_tradeoff(const std::vector<ConeCost>& cones, long long ell, int k,
                                   int n, long long h, double eps);

/// Per-cone (T, k_L, m_L) of a Pauli-rotation circuit.
std::vector<ConeCost> cone_statistics(const BrickworkCircuit& circuit,
                                      const LightConeDecomposition& dec);

struct PhaseGateCheck {
  double measured = 0.0;  // half diamond distance
  double bound = 0.0;     // |theta_tilde - theta|
  bool holds = false;     // measured <= bound + 1e-9
};

/// Compares the channels of exp(i theta P) and exp(i theta_tilde P) for the
/// Pauli string P = axis on `support` of n qubits.
PhaseGateCheck phase_gate_error(double theta, double theta_tilde, PauliAxis axis,
                                std::span<const int> support, int n);

}  // namespace qprog
