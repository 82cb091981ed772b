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

#include <cmath>
#include <memory>

#include "context.hpp"
#include "qprog/error.hpp"
#include "qprog/lightcone.hpp"

namespace qprog::cli {
namespace {

struct DecomposeArgs {
  std::string circuit;
  int w = 1;
  std::string out;
};

struct TradeoffArgs {
  std::string mode = "generic";
  long long n = 0;
  long long depth = 0;
  long long w = 0;
  double eps = 0.1;
  TradeoffConstants constants;
  std::string circuit;
  std::string csv;
  int from = 4;
  int to = 20;
};

Json tradeoff_json(const TradeoffReport& r) {
  Json params;
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json cones = Json::array();
  for (const auto& c : r.per_cone) {
    cones.push_back({{"distinct_supports", c.distinct_supports},
                     {"width", c.width},
                     {"gates", c.gates},
                     {"cost", quantity(c.bits, "bits")}});
  }
  return Json{{"parameters", params},
              {"primitive", quantity(r.primitive_bits, "bits")},
              {"reduced", quantity(r.reduced_bits, "bits")},
              {"reduced_is_cheaper", r.reduced_is_cheaper},
              {"per_cone", cones}};
}

}  // namespace

void register_lightcone(CLI::App& app, RunContext& ctx) {
  auto* lc = app.add_subcommand("lightcone", "light-cone decomposition and cost trade-offs");
  lc->require_subcommand(1);

  auto da = std::make_shared<DecomposeArgs>();
  auto* dec = lc->add_subcommand("decompose", "group a circuit's gates into light-cones");
  dec->add_option("--circuit", da->circuit, "circuit JSON path")->required();
  dec->add_option("--w", da->w, "cone depth W")->required();
  dec->add_option("--out", da->out, "output path (stdout when omitted)");
  dec->callback([&ctx, da] {
    ctx.command = "lightcone decompose";
    const BrickworkCircuit c = parse_circuit(read_file(da->circuit));
    const LightConeDecomposition d = decompose(c, da->w);
    const bool dense = c.num_qubits() <= 10;
    const DecompositionCheck check = verify_decomposition(c, d, dense);
    Json cones = Json::array();
    for (const auto& cone : d.cones) {
      cones.push_back({{"kind", to_string(cone.kind)},
                       {"gate_indices", cone.gate_indices},
                       {"support", cone.support},
                       {"first_layer", cone.first_layer},
                       {"depth", cone.depth}});
    }
    Json checks{{"disjoint", check.disjoint}, {"order_ok", check.order_ok}};
    checks["unitary_gap"] = dense ? quantity(check.unitary_gap, "operator_norm") : Json(nullptr);
    Json doc{{"window", d.window},
             {"cones", cones},
             {"execution_order", d.execution_order},
             {"check", checks}};
    ctx.write_text(da->out, doc.dump(2) + "\n");
  });

  auto ta = std::make_shared<TradeoffArgs>();
  auto* tr = lc->add_subcommand("tradeoff", "primitive vs light-cone-reduced program cost");
  tr->add_option("--mode", ta->mode, "generic|structured")
      ->check(CLI::IsMember({"generic", "structured"}))
      ->capture_default_str();
  tr->add_option("--n-qubits", ta->n, "N (generic)");
  tr->add_option("--depth", ta->depth, "D (generic)");
  tr->add_option("--w", ta->w, "cone depth W");
  tr->add_option("--eps", ta->eps, "error in (0, 1]")->capture_default_str();
  tr->add_option("--c", ta->constants.exponent, "exponent constant in 2^{cW}")->capture_default_str();
  tr->add_option("--circuit", ta->circuit, "Pauli-rotation circuit JSON (structured)");
  tr->add_option("--csv", ta->csv,
                 "generic: sweep N = 2^from..2^to with W = D = ceil(log2^2 N); structured: per-cone table");
  tr->add_option("--from", ta->from, "smallest log2 N of the sweep")->capture_default_str();
  tr->add_option("--to", ta->to, "largest log2 N of the sweep")->capture_default_str();
  tr->callback([&ctx, ta, tr] {
    ctx.command = "lightcone tradeoff";
    const bool want_csv = tr->get_option("--csv")->count() > 0;
    if (ta->mode == "generic") {
      if (want_csv) {
        Csv csv({"N", "D", "W", "eps", "c", "primitive_bits", "reduced_bits", "ratio"});
        for (const auto& p : generic_tradeoff_sweep(ta->from, ta->to, ta->eps, ta->constants)) {
          csv.row({num(p.n), num(p.w), num(p.w), num(ta->eps), num(ta->constants.exponent),
                   num(p.primitive_bits), num(p.reduced_bits), num(p.ratio)});
        }
        ctx.write_text(ta->csv, csv.str());
        return;
      }
      ctx.emit(tradeoff_json(generic_tradeoff(ta->n, ta->depth, ta->w, ta->eps, ta->constants)));
      return;
    }
    if (ta->circuit.empty()) fail(ErrorCode::InvalidParams, "structured mode needs --circuit");
    const BrickworkCircuit c = parse_circuit(read_file(ta->circuit));
    const LightConeDecomposition d = decompose(c, ta->w < 1 ? c.depth() : static_cast<int>(ta->w));
    const auto stats = cone_statistics(c, d);
    const TradeoffReport r =
        structured_tradeoff(stats, static_cast<long long>(c.num_gates()), c.locality(),
                            c.num_qubits(), static_cast<long long>(stats.size()), ta->eps);
    if (want_csv) {
      Csv csv({"cone", "T", "k_cone", "m_cone", "bits"});
      for (std::size_t i = 0; i < r.per_cone.size(); ++i) {
        const auto& cc = r.per_cone[i];
        csv.row({num(static_cast<long long>(i)), num(cc.distinct_supports),
                 num(static_cast<long long>(cc.width)), num(cc.gates), num(cc.bits)});
      }
      ctx.write_text(ta->csv, csv.str());
      if (ta->csv.empty() || ta->csv == "-") return;
    }
    ctx.emit(tradeoff_json(r));
  });
}

}  // namespace qprog::cli
