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

#include "qprog/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>

#include "json.hpp"

#include "qprog/error.hpp"
#include "qprog/parallel.hpp"

namespace qprog {
namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void invalid(const std::string& message) { fail(ErrorCode::Validation, message); }

}  // namespace

ConnectivityGraph::ConnectivityGraph(int num_qubits,
                                     const std::vector<std::pair<int, int>>& edges)
    : num_qubits_(num_qubits) {
  if (num_qubits < 1) invalid("graph needs at least one qubit");
  for (auto [a, b] : edges) {
    if (a == b) invalid("self-loop on qubit " + std::to_string(a));
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
      invalid("edge endpoint outside [0, N)");
    }
    edges_.emplace(std::min(a, b), std::max(a, b));
  }
}

ConnectivityGraph ConnectivityGraph::line(int num_qubits) {
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < num_qubits; ++q) edges.emplace_back(q, q + 1);
  return ConnectivityGraph(num_qubits, edges);
}

ConnectivityGraph ConnectivityGraph::complete(int num_qubits) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < num_qubits; ++a) {
    for (int b = a + 1; b < num_qubits; ++b) edges.emplace_back(a, b);
  }
  return ConnectivityGraph(num_qubits, edges);
}

bool ConnectivityGraph::adjacent(int a, int b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool ConnectivityGraph::induces_connected(std::span<const int> qubits) const {
  if (qubits.size() <= 1) return true;
  std::vector<bool> seen(qubits.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop();
    for (std::size_t other = 0; other < qubits.size(); ++other) {
      if (!seen[other] && adjacent(qubits[cur], qubits[other])) {
        seen[other] = true;
        ++reached;
        frontier.push(other);
      }
    }
  }
  return reached == qubits.size();
}

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) fail(ErrorCode::InvalidParams, "rotation angle is not finite");
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

GateSpec make_pauli_gate(PauliAxis axis, double theta) {
  return PauliRotationGate{axis, reduce_angle(theta)};
}

DenseMatrix gate_matrix(const GateSpec& gate, int k) {
  if (const auto* dense = std::get_if<DenseGate>(&gate)) return dense->matrix;
  const auto& rot = std::get<PauliRotationGate>(gate);
  std::vector<int> local(static_cast<std::size_t>(k));
  std::iota(local.begin(), local.end(), 0);
  return pauli_rotation(rot.axis, local, rot.theta, k);
}

bool operator==(const GateSpec& a, const GateSpec& b) {
  if (a.index() != b.index()) return false;
  if (const auto* da = std::get_if<DenseGate>(&a)) {
    const auto& db = std::get<DenseGate>(b);
    return da->matrix.rows() == db.matrix.rows() && da->matrix.cols() == db.matrix.cols() &&
           da->matrix == db.matrix;
  }
  const auto& pa = std::get<PauliRotationGate>(a);
  const auto& pb = std::get<PauliRotationGate>(b);
  return pa.axis == pb.axis && pa.theta == pb.theta;
}

bool operator==(const GateSlot& a, const GateSlot& b) {
  return a.layer == b.layer && a.support == b.support && a.gate == b.gate;
}

BrickworkCircuit::BrickworkCircuit(ConnectivityGraph graph, int locality, int depth,
                                   std::vector<GateSlot> slots)
    : graph_(std::move(graph)), locality_(locality), depth_(depth), slots_(std::move(slots)) {
  const int n = graph_.num_qubits();
  if (n < 1) invalid("circuit needs at least one qubit");
  if (locality_ < 1 || locality_ > kMaxDenseLocality) {
    invalid("locality k must lie in [1, " + std::to_string(kMaxDenseLocality) + "]");
  }
  if (locality_ > n) invalid("locality k exceeds the qubit count");
  if (depth_ < 1) invalid("depth must be >= 1");

  std::vector<std::vector<bool>> occupied(static_cast<std::size_t>(depth_),
                                          std::vector<bool>(static_cast<std::size_t>(n), false));
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    auto& slot = slots_[i];
    const std::string where = "gate " + std::to_string(i) + ": ";
    if (slot.layer < 0 || slot.layer >= depth_) invalid(where + "layer outside [0, D)");
    if (static_cast<int>(slot.support.size()) != locality_) invalid(where + "|support| != k");
    for (std::size_t a = 0; a < slot.support.size(); ++a) {
      const int q = slot.support[a];
      if (q < 0 || q >= n) invalid(where + "support qubit outside [0, N)");
      for (std::size_t b = a + 1; b < slot.support.size(); ++b) {
        if (slot.support[b] == q) invalid(where + "support qubits are not distinct");
      }
    }
    if (!graph_.induces_connected(slot.support)) {
      invalid(where + "support does not induce a connected subgraph");
    }
    for (int q : slot.support) {
      auto cell = occupied[static_cast<std::size_t>(slot.layer)][static_cast<std::size_t>(q)];
      if (cell) invalid(where + "supports overlap within layer " + std::to_string(slot.layer));
      occupied[static_cast<std::size_t>(slot.layer)][static_cast<std::size_t>(q)] = true;
    }
    if (auto* dense = std::get_if<DenseGate>(&slot.gate)) {
      const Eigen::Index dim = Eigen::Index{1} << locality_;
      if (dense->matrix.rows() != dim || dense->matrix.cols() != dim) {
        invalid(where + "matrix is not 2^k x 2^k");
      }
      if (!is_unitary(dense->matrix, kUnitaryTolerance)) invalid(where + "matrix is not unitary");
    } else {
      auto& rot = std::get<PauliRotationGate>(slot.gate);
      rot.theta = reduce_angle(rot.theta);
    }
  }
  if (static_cast<long long>(slots_.size()) * locality_ > static_cast<long long>(n) * depth_) {
    invalid("gate count exceeds N*D/k");
  }
}

std::vector<std::size_t> BrickworkCircuit::layer(int r) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].layer == r) out.push_back(i);
  }
  return out;
}

namespace {

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rows.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& entries, int k, const std::string& where) {
  const Eigen::Index dim = Eigen::Index{1} << k;
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    invalid(where + "matrix must list 4^k [re, im] pairs");
  }
  DenseMatrix m(dim, dim);
  for (Eigen::Index idx = 0; idx < dim * dim; ++idx) {
    const json& e = entries[static_cast<std::size_t>(idx)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      invalid(where + "matrix entries must be [re, im] number pairs");
    }
    m(idx / dim, idx % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

template <typename T>
T required(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid(where + "missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    invalid(where + "field '" + key + "' has the wrong type");
  }
}

}  // namespace

BrickworkCircuit parse_circuit(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::Parse, "top-level value must be an object");

  const int n = required<int>(doc, "n", "");
  const int k = required<int>(doc, "k", "");
  const int d = required<int>(doc, "d", "");
  const auto edge_list = required<std::vector<std::vector<int>>>(doc, "edges", "");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : edge_list) {
    if (e.size() != 2) invalid("edges must be [a, b] pairs");
    edges.emplace_back(e[0], e[1]);
  }
  if (!doc.contains("gates") || !doc["gates"].is_array()) invalid("missing array 'gates'");
  if (k < 1 || k > kMaxDenseLocality) {
    invalid("locality k must lie in [1, " + std::to_string(kMaxDenseLocality) + "]");
  }

  std::vector<GateSlot> slots;
  for (std::size_t i = 0; i < doc["gates"].size(); ++i) {
    const json& g = doc["gates"][i];
    const std::string where = "gate " + std::to_string(i) + ": ";
    if (!g.is_object()) invalid(where + "must be an object");
    GateSlot slot;
    slot.layer = required<int>(g, "layer", where);
    slot.support = required<std::vector<int>>(g, "support", where);
    const auto kind = required<std::string>(g, "kind", where);
    if (kind == "dense") {
      if (!g.contains("matrix")) invalid(where + "missing field 'matrix'");
      slot.gate = DenseGate{matrix_from_json(g["matrix"], k, where)};
    } else if (kind == "pauli") {
      const auto axis = required<std::string>(g, "axis", where);
      if (axis.size() != 1 || (axis != "X" && axis != "Y" && axis != "Z")) {
        invalid(where + "axis must be X, Y or Z");
      }
      slot.gate = make_pauli_gate(pauli_axis_from_char(axis[0]), required<double>(g, "theta", where));
    } else {
      invalid(where + "kind must be \"dense\" or \"pauli\"");
    }
    slots.push_back(std::move(slot));
  }
  return BrickworkCircuit(ConnectivityGraph(n, edges), k, d, std::move(slots));
}

std::string serialize_circuit(const BrickworkCircuit& circuit) {
  json doc;
  doc["n"] = circuit.num_qubits();
  doc["k"] = circuit.locality();
  doc["d"] = circuit.depth();
  json edges = json::array();
  for (auto [a, b] : circuit.graph().edges()) edges.push_back(json::array({a, b}));
  doc["edges"] = edges;
  json gates = json::array();
  for (const auto& slot : circuit.slots()) {
    json g;
    g["layer"] = slot.layer;
    g["support"] = slot.support;
    if (const auto* dense = std::get_if<DenseGate>(&slot.gate)) {
      g["kind"] = "dense";
      g["matrix"] = matrix_to_json(dense->matrix);
    } else {
      const auto& rot = std::get<PauliRotationGate>(slot.gate);
      g["kind"] = "pauli";
      g["axis"] = std::string(1, to_char(rot.axis));
      g["theta"] = rot.theta;
    }
    gates.push_back(std::move(g));
  }
  doc["gates"] = gates;
  return doc.dump();
}

Geometry geometry_from_string(std::string_view name) {
  if (name == "1d-line" || name == "line") return Geometry::line;
  if (name == "complete") return Geometry::complete;
  fail(ErrorCode::InvalidParams, "unknown geometry '" + std::string(name) + "'");
}

namespace {

struct Layout {
  ConnectivityGraph graph;
  std::vector<std::pair<int, std::vector<int>>> placements;  // (layer, support)
};

Layout brick_layout(int n, int depth, int k, Geometry geometry, std::uint64_t seed) {
  if (k < 1 || k > kMaxDenseLocality) fail(ErrorCode::InvalidParams, "k must lie in [1, 3]");
  if (n < k) fail(ErrorCode::InvalidParams, "need N >= k");
  if (depth < 1) fail(ErrorCode::InvalidParams, "need D >= 1");
  Layout layout;
  if (geometry == Geometry::line) {
    layout.graph = ConnectivityGraph::line(n);
    for (int r = 0; r < depth; ++r) {
      const int offset = (r % 2 == 0) ? 0 : k / 2;
      for (int start = offset; start + k <= n; start += k) {
        std::vector<int> support(static_cast<std::size_t>(k));
        std::iota(support.begin(), support.end(), start);
        layout.placements.emplace_back(r, std::move(support));
      }
    }
  } else {
    layout.graph = ConnectivityGraph::complete(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int r = 0; r < depth; ++r) {
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 rng(sub_seed(seed ^ 0x6c617965725f7065ULL, static_cast<std::uint64_t>(r)));
      std::shuffle(order.begin(), order.end(), rng);
      for (int start = 0; start + k <= n; start += k) {
        std::vector<int> support(order.begin() + start, order.begin() + start + k);
        layout.placements.emplace_back(r, std::move(support));
      }
    }
  }
  return layout;
}

}  // namespace

BrickworkCircuit random_brickwork(int n, int depth, int k, Geometry geometry, std::uint64_t seed) {
  Layout layout = brick_layout(n, depth, k, geometry, seed);
  std::vector<GateSlot> slots;
  slots.reserve(layout.placements.size());
  for (std::size_t i = 0; i < layout.placements.size(); ++i) {
    auto& [layer, support] = layout.placements[i];
    slots.push_back(GateSlot{std::move(support), DenseGate{haar_unitary(1 << k, sub_seed(seed, i))},
                             layer});
  }
  return BrickworkCircuit(std::move(layout.graph), k, depth, std::move(slots));
}

BrickworkCircuit random_pauli_brickwork(int n, int depth, int k, Geometry geometry,
                                        PauliAxis axis, std::uint64_t seed) {
  Layout layout = brick_layout(n, depth, k, geometry, seed);
  std::vector<GateSlot> slots;
  slots.reserve(layout.placements.size());
  for (std::size_t i = 0; i < layout.placements.size(); ++i) {
    auto& [layer, support] = layout.placements[i];
    std::mt19937_64 rng(sub_seed(seed, i));
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    slots.push_back(GateSlot{std::move(support), make_pauli_gate(axis, angle(rng)), layer});
  }
  return BrickworkCircuit(std::move(layout.graph), k, depth, std::move(slots));
}

DenseMatrix ordered_product(const BrickworkCircuit& circuit, std::span<const std::size_t> order) {
  const int n = circuit.num_qubits();
  if (n > kMaxDenseQubits) {
    fail(ErrorCode::TooLarge, "dense evaluation is limited to N <= " +
                                  std::to_string(kMaxDenseQubits));
  }
  DenseMatrix u = DenseMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (std::size_t idx : order) {
    if (idx >= circuit.num_gates()) fail(ErrorCode::IndexOutOfRange, "gate index out of range");
    const auto& slot = circuit.slots()[idx];
    apply_gate_left(u, gate_matrix(slot.gate, circuit.locality()), slot.support, n);
  }
  return u;
}

DenseMatrix circuit_unitary(const BrickworkCircuit& circuit) {
  std::vector<std::size_t> order;
  order.reserve(circuit.num_gates());
  for (int r = 0; r < circuit.depth(); ++r) {
    for (std::size_t idx : circuit.layer(r)) order.push_back(idx);
  }
  return ordered_product(circuit, order);
}

}  // namespace qprog
