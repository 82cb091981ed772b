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

// Layered brickwork circuits of k-local gates on a connectivity graph.

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qprog/matrixcore.hpp"

namespace qprog {

/// Dense evaluation is only offered up to this many qubits.
inline constexpr int kMaxDenseQubits = 12;
/// Largest gate locality the dense paths accept.
inline constexpr int kMaxDenseLocality = 3;

class ConnectivityGraph {
 public:
  ConnectivityGraph() = default;
  /// Edges are stored as (min, max); duplicates collapse. Self-loops and
  /// out-of-range endpoints raise ValidationError.
  ConnectivityGraph(int num_qubits, const std::vector<std::pair<int, int>>& edges);

  static ConnectivityGraph line(int num_qubits);
  static ConnectivityGraph complete(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  /// True when the induced subgraph on `qubits` is connected.
  bool induces_connected(std::span<const int> qubits) const;

  friend bool operator==(const ConnectivityGraph&, const ConnectivityGraph&) = default;

 private:
  int num_qubits_ = 0;
  std::set<std::pair<int, int>> edges_;
};

struct DenseGate {
  DenseMatrix matrix;
};

/// exp(i theta P^{(x) k}) on the gate support.
struct PauliRotationGate {
  PauliAxis axis = PauliAxis::Z;
  double theta = 0.0;  // kept in [0, 2 pi)
};

using GateSpec = std::variant<DenseGate, PauliRotationGate>;

double reduce_angle(double theta);
GateSpec make_pauli_gate(PauliAxis axis, double theta);

/// 2^k x 2^k matrix of a gate acting on k qubits.
DenseMatrix gate_matrix(const GateSpec& gate, int k);

bool operator==(const GateSpec& a, const GateSpec& b);

struct GateSlot {
  std::vector<int> support;  // ordered; matrix index bit j is support[j]
  GateSpec gate;
  int layer = 0;
};

bool operator==(const GateSlot& a, const GateSlot& b);

class BrickworkCircuit {
 public:
  /// Validates every structural invariant and throws ValidationError naming
  /// the first one that fails.
  BrickworkCircuit(ConnectivityGraph graph, int locality, int depth, std::vector<GateSlot> slots);

  const ConnectivityGraph& graph() const { return graph_; }
  int num_qubits() const { return graph_.num_qubits(); }
  int locality() const { return locality_; }
  int depth() const { return depth_; }
  const std::vector<GateSlot>& slots() const { return slots_; }
  std::size_t num_gates() const { return slots_.size(); }

  /// Slot indices in layer r, in slot order.
  std::vector<std::size_t> layer(int r) const;

  friend bool operator==(const BrickworkCircuit&, const BrickworkCircuit&) = default;

 private:
  ConnectivityGraph graph_;
  int locality_;
  int depth_;
  std::vector<GateSlot> slots_;
};

/// Parses the circuit JSON document:
/// { "n", "k", "d", "edges": [[a,b],...], "gates": [ {"layer", "support",
///   "kind": "dense", "matrix": [[re,im],...]} | {..., "kind": "pauli",
///   "axis": "X"|"Y"|"Z", "theta"} ] }
BrickworkCircuit parse_circuit(std::string_view text);
std::string serialize_circuit(const BrickworkCircuit& circuit);

enum class Geometry { line, complete };

Geometry geometry_from_string(std::string_view name);

/// Interlaced brick pattern. On a line, even layers start at qubit 0 and odd
/// layers at floor(k/2); on the complete graph each layer is a seeded random
/// packing of floor(N/k) disjoint k-subsets. Gates are Haar random.
BrickworkCircuit random_brickwork(int n, int depth, int k, Geometry geometry, std::uint64_t seed);

/// Same layout as random_brickwork with Pauli-rotation gates of one axis and
/// uniform angles.
BrickworkCircuit random_pauli_brickwork(int n, int depth, int k, Geometry geometry,
                                        PauliAxis axis, std::uint64_t seed);

/// prod_r prod_{j in L_r} G_j, layers applied in ascending order. N <= 12.
DenseMatrix circuit_unitary(const BrickworkCircuit& circuit);

/// Applies the listed slots in the given order to the identity.
DenseMatrix ordered_product(const BrickworkCircuit& circuit, std::span<const std::size_t> order);

}  // namespace qprog
