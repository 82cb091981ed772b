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

#include "qprog/lightcone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <set>

#include "qprog/error.hpp"

namespace qprog {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxReplayQubits = 10;

bool touches(const std::vector<bool>& mask, const std::vector<int>& support) {
  return std::any_of(support.begin(), support.end(),
                     [&](int q) { return mask[static_cast<std::size_t>(q)]; });
}

}  // namespace

std::string to_string(ConeKind kind) { return kind == ConeKind::forward ? "forward" : "backward"; }

LightConeDecomposition decompose(const BrickworkCircuit& circuit, int w) {
  const int depth = circuit.depth();
  if (w < 1 || w > depth) fail(ErrorCode::InvalidW, "W must lie in [1, D]");
  const auto n = static_cast<std::size_t>(circuit.num_qubits());
  const auto& slots = circuit.slots();

  LightConeDecomposition dec;
  dec.window = w;
  std::vector<std::vector<bool>> masks;  // qubit contact per cone
  std::vector<std::size_t> cone_of(slots.size());

  for (int band_start = 0, band = 0; band_start < depth; band_start += w, ++band) {
    const int band_end = std::min(depth, band_start + w);
    const ConeKind kind = band % 2 == 0 ? ConeKind::forward : ConeKind::backward;
    const std::size_t first_cone = dec.cones.size();
    for (int step = 0; step < band_end - band_start; ++step) {
      const int r = kind == ConeKind::forward ? band_start + step : band_end - 1 - step;
      for (std::size_t idx : circuit.layer(r)) {
        const auto& support = slots[idx].support;
        std::size_t target = dec.cones.size();
        for (std::size_t c = first_cone; c < dec.cones.size(); ++c) {
          if (touches(masks[c], support)) {
            target = c;
            break;
          }
        }
        if (target == dec.cones.size()) {
          dec.cones.push_back(LightCone{{}, {}, r, 0, kind});
          masks.emplace_back(n, false);
        }
        dec.cones[target].gate_indices.push_back(idx);
        for (int q : support) masks[target][static_cast<std::size_t>(q)] = true;
        cone_of[idx] = target;
      }
    }
  }

  for (std::size_t c = 0; c < dec.cones.size(); ++c) {
    auto& cone = dec.cones[c];
    std::sort(cone.gate_indices.begin(), cone.gate_indices.end(),
              [&](std::size_t a, std::size_t b) {
                return std::pair(slots[a].layer, a) < std::pair(slots[b].layer, b);
              });
    for (std::size_t q = 0; q < n; ++q) {
      if (masks[c][q]) cone.support.push_back(static_cast<int>(q));
    }
    cone.first_layer = slots[cone.gate_indices.front()].layer;
    cone.depth = slots[cone.gate_indices.back()].layer - cone.first_layer + 1;
  }

  // Cone-level dependency graph from consecutive gates on each qubit.
  const std::size_t h = dec.cones.size();
  std::vector<std::set<std::size_t>> succ(h);
  std::vector<std::size_t> indegree(h, 0);
  std::vector<std::vector<std::size_t>> wire(n);
  for (int r = 0; r < depth; ++r) {
    for (std::size_t idx : circuit.layer(r)) {
      for (int q : slots[idx].support) wire[static_cast<std::size_t>(q)].push_back(idx);
    }
  }
  for (const auto& gates : wire) {
    for (std::size_t i = 1; i < gates.size(); ++i) {
      const std::size_t from = cone_of[gates[i - 1]];
      const std::size_t to = cone_of[gates[i]];
      if (from != to && succ[from].insert(to).second) ++indegree[to];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t c = 0; c < h; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  while (!ready.empty()) {
    const std::size_t c = ready.top();
    ready.pop();
    dec.execution_order.push_back(c);
    for (std::size_t next : succ[c]) {
      if (--indegree[next] == 0) ready.push(next);
    }
  }
  if (dec.execution_order.size() != h) {
    fail(ErrorCode::Numeric, "light-cone quotient graph has a cycle");
  }
  return dec;
}

std::vector<std::size_t> replay_order(const LightConeDecomposition& dec) {
  std::vector<std::size_t> order;
  for (std::size_t c : dec.execution_order) {
    if (c >= dec.cones.size()) fail(ErrorCode::IndexOutOfRange, "execution order names no cone");
    const auto& gates = dec.cones[c].gate_indices;
    order.insert(order.end(), gates.begin(), gates.end());
  }
  return order;
}

DecompositionCheck verify_decomposition(const BrickworkCircuit& circuit,
                                        const LightConeDecomposition& dec, bool dense) {
  if (dense && circuit.num_qubits() > kMaxReplayQubits) {
    fail(ErrorCode::TooLarge, "dense replay is limited to N <= 10");
  }
  DecompositionCheck check;
  const auto& slots = circuit.slots();

  std::vector<int> seen(slots.size(), 0);
  bool in_range = true;
  for (const auto& cone : dec.cones) {
    for (std::size_t idx : cone.gate_indices) {
      if (idx >= slots.size()) {
        in_range = false;
        continue;
      }
      ++seen[idx];
    }
  }
  check.disjoint = in_range && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });

  std::vector<std::size_t> order;
  bool order_valid = dec.execution_order.size() == dec.cones.size();
  {
    std::vector<bool> listed(dec.cones.size(), false);
    for (std::size_t c : dec.execution_order) {
      if (c >= dec.cones.size() || listed[c]) {
        order_valid = false;
        break;
      }
      listed[c] = true;
    }
  }
  if (order_valid && check.disjoint) {
    order = replay_order(dec);
    std::vector<std::size_t> position(slots.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    check.order_ok = true;
    for (std::size_t a = 0; a < slots.size() && check.order_ok; ++a) {
      for (std::size_t b = 0; b < slots.size(); ++b) {
        if (slots[a].layer >= slots[b].layer) continue;
        const bool shared = std::any_of(slots[a].support.begin(), slots[a].support.end(), [&](int q) {
          return std::find(slots[b].support.begin(), slots[b].support.end(), q) !=
                 slots[b].support.end();
        });
        if (shared && position[a] > position[b]) {
          check.order_ok = false;
          break;
        }
      }
    }
  }

  if (!dense) {
    check.unitary_gap = std::numeric_limits<double>::quiet_NaN();
  } else if (check.disjoint && order_valid) {
    check.unitary_gap = operator_norm(circuit_unitary(circuit) - ordered_product(circuit, order));
  } else {
    check.unitary_gap = std::numeric_limits<double>::infinity();
  }
  return check;
}

TradeoffReport generic_tradeoff(long long n, long long depth, long long w, double eps,
                                const TradeoffConstants& constants) {
  if (n < 1 || depth < 1) fail(ErrorCode::InvalidParams, "N and D must be >= 1");
  if (w < 1 || w > depth) fail(ErrorCode::InvalidParams, "W must lie in [1, D]");
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidParams, "eps must lie in (0, 1]");
  if (!(constants.exponent > 0.0 && constants.primitive >= 0.0 && constants.reduced >= 0.0)) {
    fail(ErrorCode::InvalidParams, "constants must be positive");
  }
  const double nn = static_cast<double>(n);
  const double nd = nn * static_cast<double>(depth);
  const double ww = static_cast<double>(w);

  TradeoffReport r;
  r.parameters = {{"N", nn}, {"D", static_cast<double>(depth)}, {"W", ww}, {"eps", eps},
                  {"c", constants.exponent}};
  r.primitive_bits = constants.primitive * (nd * std::log2(nn) + nd * std::log2(nd / eps));
  r.reduced_bits = constants.reduced *
                   ((nd / ww) * std::log2(nn / ww) +
                    std::exp2(constants.exponent * ww) * (nd / (ww * ww)) *
                        std::log2(nd / (ww * ww * eps)));
  r.reduced_is_cheaper = r.reduced_bits < r.primitive_bits;
  return r;
}

std::vector<GenericSweepPoint> generic_tradeoff_sweep(int log2_min, int log2_max, double eps,
                                                      const TradeoffConstants& constants) {
  if (log2_min < 1 || log2_max < log2_min || log2_max > 40) {
    fail(ErrorCode::InvalidParams, "sweep exponents must satisfy 1 <= a <= b <= 40");
  }
  std::vector<GenericSweepPoint> out;
  for (int a = log2_min; a <= log2_max; ++a) {
    const long long n = 1LL << a;
    const long long w = static_cast<long long>(a) * a;
    const auto r = generic_tradeoff(n, w, w, eps, constants);
    out.push_back({n, w, r.primitive_bits, r.reduced_bits, r.reduced_bits / r.primitive_bits});
  }
  return out;
}

std::vector<GateSlot> merge_pauli_cone(const std::vector<GateSlot>& gates) {
  std::vector<GateSlot> merged;
  std::map<std::vector<int>, std::size_t> where;
  const PauliRotationGate* first = nullptr;
  for (const auto& slot : gates) {
    const auto* rot = std::get_if<PauliRotationGate>(&slot.gate);
    if (rot == nullptr) fail(ErrorCode::MixedAxes, "dense gate in a Pauli merge");
    if (first == nullptr) first = rot;
    if (rot->axis != first->axis) fail(ErrorCode::MixedAxes, "gates use different Pauli axes");
    std::vector<int> key = slot.support;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
      fail(ErrorCode::InvalidParams, "support qubits are not distinct");
    }
    auto [it, inserted] = where.emplace(key, merged.size());
    if (inserted) {
      merged.push_back(GateSlot{key, PauliRotationGate{rot->axis, reduce_angle(rot->theta)},
                                slot.layer});
    } else {
      auto& acc = std::get<PauliRotationGate>(merged[it->second].gate);
      acc.theta = reduce_angle(acc.theta + rot->theta);
    }
  }
  return merged;
}

TradeoffReport structured_tradeoff(const std::vector<ConeCost>& cones, long long ell, int k,
                                   int n, long long h, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidParams, "eps must lie in (0, 1]");
  if (h < 1) fail(ErrorCode::InvalidParams, "h must be >= 1");
  if (ell < 1 || k < 1 || n < k) fail(ErrorCode::InvalidParams, "need l >= 1 and N >= k >= 1");
  const double e = std::numbers::e;
  TradeoffReport r;
  for (const auto& cone : cones) {
    if (cone.distinct_supports < 1) fail(ErrorCode::InvalidParams, "every cone needs T >= 1");
    if (cone.width < 1 || cone.width > n) fail(ErrorCode::InvalidParams, "cone width outside [1, N]");
    const double t = static_cast<double>(cone.distinct_supports);
    ConeCost cost = cone;
    cost.bits = t * std::log2(kTwoPi * static_cast<double>(h) * t / eps) +
                t * cone.width * std::log2(e * n / cone.width);
    r.reduced_bits += cost.bits;
    r.per_cone.push_back(cost);
  }
  const double l = static_cast<double>(ell);
  r.primitive_bits = l * (std::log2(kTwoPi * l / eps) + k * std::log2(e * n / k));
  r.reduced_is_cheaper = r.reduced_bits < r.primitive_bits;
  r.parameters = {{"N", n}, {"k", k}, {"ell", l}, {"h", static_cast<double>(h)}, {"eps", eps}};
  return r;
}

std::vector<ConeCost> cone_statistics(const BrickworkCircuit& circuit,
                                      const LightConeDecomposition& dec) {
  std::vector<ConeCost> out;
  for (const auto& cone : dec.cones) {
    std::vector<GateSlot> members;
    for (std::size_t idx : cone.gate_indices) members.push_back(circuit.slots().at(idx));
    ConeCost c;
    c.gates = static_cast<long long>(members.size());
    c.width = cone.width();
    c.distinct_supports = static_cast<long long>(merge_pauli_cone(members).size());
    out.push_back(c);
  }
  return out;
}

PhaseGateCheck phase_gate_error(double theta, double theta_tilde, PauliAxis axis,
                                std::span<const int> support, int n) {
  const DenseMatrix target = pauli_rotation(axis, support, theta, n);
  const DenseMatrix programmed = pauli_rotation(axis, support, theta_tilde, n);
  PhaseGateCheck out;
  out.measured = 0.5 * diamond_distance_unitary(programmed, target);
  out.bound = std::abs(theta_tilde - theta);
  out.holds = out.measured <= out.bound + 1e-9;
  return out;
}

}  // namespace qprog
