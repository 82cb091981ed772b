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
#include "qprog/bounds.hpp"
#include "qprog/error.hpp"
#include "qprog/processor.hpp"

namespace qprog::cli {
namespace {

struct ProgramArgs {
  std::string circuit;
  double eps = 0.0;
  std::string report;
  bool skip_dense = false;
};

struct RandomArgs {
  int n = 0;
  int depth = 1;
  int k = 2;
  std::string geometry = "line";
  std::string pauli;
  std::string out;
};

}  // namespace

void register_program(CLI::App& app, RunContext& ctx) {
  auto pa = std::make_shared<ProgramArgs>();
  auto* prog = app.add_subcommand("program", "program a circuit gate by gate against eps/l nets");
  prog->add_option("--circuit", pa->circuit, "circuit JSON path")->required();
  prog->add_option("--eps", pa->eps, "whole-circuit diamond error in (0, 1]")->required();
  prog->add_option("--report", pa->report, "write the full report here");
  prog->add_flag("--skip-dense", pa->skip_dense, "skip the dense achieved-error check");
  prog->callback([&ctx, pa] {
    ctx.command = "program";
    if (!(pa->eps > 0.0 && pa->eps <= 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must lie in (0, 1]");
    const BrickworkCircuit c = parse_circuit(read_file(pa->circuit));
    const ProgrammedCircuit p = program_circuit(c, pa->eps, nullptr, !pa->skip_dense);
    const auto ell = static_cast<long long>(c.num_gates());
    Json doc;
    doc["eps"] = quantity(pa->eps, "diamond");
    doc["per_gate_eps"] = quantity(p.per_gate_eps, "diamond");
    doc["gates"] = ell;
    doc["location_bits"] = quantity(p.program.location_bits, "bits");
    doc["net"] = {{"construction", p.net->certified() ? "grid" : "sampled"},
                  {"size", p.net->size()},
                  {"log2_size", quantity(p.net->log2_size(), "bits")},
                  {"target_eps", quantity(p.net->target_eps(), "diamond")},
                  {"certified", p.net->certified()}};
    doc["total_cost_bits"] = quantity(p.total_cost_bits, "bits");
    doc["covering_budget"] =
        quantity(covering_log2_brickwork(c.num_qubits(), c.locality(), ell, pa->eps), "bits");
    doc["achieved_error"] =
        pa->skip_dense ? Json(nullptr) : quantity(p.achieved_error, "diamond");
    doc["gap_sum"] = quantity(p.gap_sum, "diamond");
    Json summary = doc;
    Json per_gate = Json::array();
    for (const auto& g : p.program.gates) {
      per_gate.push_back({{"location", g.location},
                          {"net_index", g.net_index},
                          {"gap", quantity(g.gap, "diamond")}});
    }
    doc["per_gate"] = per_gate;
    if (pa->report.empty()) {
      ctx.emit(doc);
    } else {
      ctx.write_text(pa->report, doc.dump(2) + "\n");
      ctx.emit(summary);
    }
  });

  auto ra = std::make_shared<RandomArgs>();
  auto* circ = app.add_subcommand("circuit", "circuit utilities");
  circ->require_subcommand(1);
  auto* random = circ->add_subcommand("random", "random brickwork circuit as JSON");
  random->add_option("--n", ra->n, "qubits N")->required();
  random->add_option("--depth", ra->depth, "depth D")->required();
  random->add_option("--k", ra->k, "locality k")->capture_default_str();
  random->add_option("--geometry", ra->geometry, "line|complete")->capture_default_str();
  random->add_option("--pauli", ra->pauli, "X|Y|Z: Pauli-rotation gates instead of Haar gates");
  random->add_option("--out", ra->out, "output path (stdout when omitted)");
  random->callback([&ctx, ra] {
    ctx.command = "circuit random";
    const std::uint64_t seed = ctx.require_seed();
    const Geometry g = geometry_from_string(ra->geometry);
    const BrickworkCircuit c =
        ra->pauli.empty()
            ? random_brickwork(ra->n, ra->depth, ra->k, g, seed)
            : random_pauli_brickwork(ra->n, ra->depth, ra->k, g,
                                     ra->pauli.size() == 1 ? pauli_axis_from_char(ra->pauli[0])
                                                           : pauli_axis_from_char('?'),
                                     seed);
    ctx.write_text(ra->out, serialize_circuit(c) + "\n");
  });
}

}  // namespace qprog::cli
