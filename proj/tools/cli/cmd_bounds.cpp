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

#include <memory>

#include "context.hpp"
#include "qprog/bounds.hpp"

namespace qprog::cli {
namespace {

Json report_json(const std::string& bound, const CostReport& r) {
  Json doc;
  doc["bound"] = bound;
  Json inputs;
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  doc["inputs"] = inputs;
  doc["value"] = quantity(r.value_bits, "bits");
  doc["valid"] = r.valid;
  doc["validity_notes"] = r.validity_notes;
  return doc;
}

struct UpperArgs {
  int n = 0;
  int k = 2;
  long long ell = 0;
  double eps = 0.0;
};

struct LowerArgs {
  int n = 0;
  double eps = 0.0;
  double varpi = 0.0;
  double kappa = 0.0;
  bool optimize = false;
  int grid = 256;
};

struct SweepArgs {
  int from = 6;
  int to = 20;
  double kappa = 0.5;
  int grid = 256;
  std::string csv;
};

struct DesignArgs {
  std::string row = "all";
  int n = 0;
  long long t = 1;
  double rho = 0.0;
  DesignExtra extra;
};

struct MoCostArgs {
  long long d = 2;
  long long copies = 1;
  double zeta = 0.0;
  double tau = 0.0;
  GateCostConstants constants;
};

struct BudgetArgs {
  double eps = 0.0;
  double zeta = 0.0;
  double tau = 0.0;
  double delta = 0.0;
};

}  // namespace

void register_bounds(CLI::App& app, RunContext& ctx) {
  auto* bounds = app.add_subcommand("bounds", "closed-form program-cost and resource bounds");
  bounds->require_subcommand(1);

  auto up = std::make_shared<UpperArgs>();
  auto* upper = bounds->add_subcommand("upper", "program-cost upper bound (brickwork covering number)");
  upper->add_option("--n-qubits", up->n, "N")->required();
  upper->add_option("--k", up->k, "gate locality")->capture_default_str();
  upper->add_option("--ell", up->ell, "number of gates")->required();
  upper->add_option("--eps", up->eps, "diamond-distance error in (0, 1]")->required();
  upper->callback([&ctx, up] {
    ctx.command = "bounds upper";
    const CostReport r = program_cost_upper(up->n, up->k, up->ell, up->eps);
    Json doc = report_json("program_cost_upper", r);
    doc["covering_log2_brickwork"] =
        quantity(covering_log2_brickwork(up->n, up->k, up->ell, up->eps), "bits");
    ctx.emit(doc);
  });

  auto lo = std::make_shared<LowerArgs>();
  auto* lower = bounds->add_subcommand("lower", "program-cost lower bound");
  lower->add_option("--n-qubits", lo->n, "N")->required();
  lower->add_option("--eps", lo->eps, "error in (0, 1/32)")->required();
  lower->add_option("--varpi", lo->varpi, "success parameter (ignored with --optimize)");
  lower->add_option("--kappa", lo->kappa, "kappa in (0, 1)")->required();
  lower->add_flag("--optimize", lo->optimize, "maximize over varpi");
  lower->add_option("--grid", lo->grid, "grid size for --optimize")->capture_default_str();
  lower->callback([&ctx, lo] {
    ctx.command = "bounds lower";
    if (lo->optimize) {
      const LowerOptimum opt = optimize_lower(lo->n, lo->eps, lo->kappa, lo->grid);
      Json doc = report_json("program_cost_lower", opt.report);
      doc["varpi_opt"] = opt.varpi;
      ctx.emit(doc);
    } else {
      ctx.emit(report_json("program_cost_lower",
                           program_cost_lower(lo->n, lo->eps, lo->varpi, lo->kappa)));
    }
  });

  auto sw = std::make_shared<SweepArgs>();
  auto* sweep = bounds->add_subcommand(
      "sweep", "lower vs upper bound over N = 2^from .. 2^to (D = ceil(log2^2 N), eps = 1/log2^2 N)");
  sweep->add_option("--from", sw->from, "smallest log2 N")->capture_default_str();
  sweep->add_option("--to", sw->to, "largest log2 N")->capture_default_str();
  sweep->add_option("--kappa", sw->kappa, "kappa")->capture_default_str();
  sweep->add_option("--grid", sw->grid, "optimizer grid")->capture_default_str();
  sweep->add_option("--csv", sw->csv, "CSV output path (stdout when omitted)");
  sweep->callback([&ctx, sw] {
    ctx.command = "bounds sweep";
    Csv csv({"N", "D", "ell", "eps", "kappa", "varpi", "lower_bits", "upper_bits", "lower_ratio",
             "upper_ratio", "valid"});
    for (const auto& p : tightness_sweep(sw->from, sw->to, sw->kappa, sw->grid)) {
      csv.row({num(static_cast<long long>(p.n)), num(static_cast<long long>(p.depth)), num(p.ell),
               num(p.eps), num(sw->kappa), num(p.varpi), num(p.lower_bits), num(p.upper_bits),
               num(p.lower_ratio), num(p.upper_ratio), p.lower_bits <= p.upper_bits ? "1" : "0"});
    }
    ctx.write_text(sw->csv, csv.str());
  });

  auto dd = std::make_shared<DesignArgs>();
  auto* design = bounds->add_subcommand("design-depth", "unitary t-design depth bounds");
  design->add_option("--row", dd->row, "harrow|jeongwan|metger_diamond|metger_relative|chen|schuster|all")
      ->capture_default_str();
  design->add_option("--n-qubits", dd->n, "N")->required();
  design->add_option("--t", dd->t, "design order t")->required();
  design->add_option("--rho", dd->rho, "approximation error in (0, 1]")->required();
  design->add_option("--xi", dd->extra.xi, "schuster patch parameter")->capture_default_str();
  design->add_option("--lattice-dim", dd->extra.lattice_dim, "harrow lattice dimension")
      ->capture_default_str();
  design->callback([&ctx, dd] {
    ctx.command = "bounds design-depth";
    std::vector<DesignRow> rows =
        dd->row == "all" ? all_design_rows() : std::vector<DesignRow>{design_row_from_string(dd->row)};
    Json list = Json::array();
    for (DesignRow row : rows) {
      const DesignDepth r = design_depth_bound(row, dd->n, dd->t, dd->rho, dd->extra);
      list.push_back({{"row", to_string(row)},
                      {"depth", quantity(r.depth, "layers")},
                      {"valid", r.valid},
                      {"condition", r.condition}});
    }
    ctx.emit(Json{{"N", dd->n}, {"t", dd->t}, {"rho", dd->rho}, {"rows", list}});
  });

  auto mc = std::make_shared<MoCostArgs>();
  auto* mo = bounds->add_subcommand("mo-cost", "measure-and-operate gate-count model");
  mo->add_option("--d", mc->d, "dimension, a power of two")->required();
  mo->add_option("--copies", mc->copies, "number of copies n")->required();
  mo->add_option("--zeta", mc->zeta, "Schur-transform error in (0, 1]")->required();
  mo->add_option("--tau", mc->tau, "synthesis error in (0, 1]")->required();
  mo->add_option("--c-schur", mc->constants.schur_transform, "multiplier")->capture_default_str();
  mo->add_option("--c-prep", mc->constants.state_prep, "multiplier")->capture_default_str();
  mo->add_option("--c-tensor", mc->constants.tensor_generation, "multiplier")->capture_default_str();
  mo->add_option("--c-synth", mc->constants.synthesis, "multiplier")->capture_default_str();
  mo->callback([&ctx, mc] {
    ctx.command = "bounds mo-cost";
    const GateCostEstimate g = mo_gate_complexity(mc->d, mc->copies, mc->zeta, mc->tau, mc->constants);
    ctx.emit(Json{{"model", "schur = n^3 log2 d log2(1/zeta); prep = n log2 d; tensor = n d^2; "
                            "synthesis = d^2 log2^3(d^2/tau)"},
                  {"schur_transform", quantity(g.schur_transform, "gates")},
                  {"state_prep", quantity(g.state_prep, "gates")},
                  {"tensor_generation", quantity(g.tensor_generation, "gates")},
                  {"synthesis", quantity(g.synthesis, "gates")},
                  {"total", quantity(g.total, "gates")}});
  });

  auto eb = std::make_shared<BudgetArgs>();
  auto* budget = bounds->add_subcommand("error-budget", "measure-and-operate error budget");
  budget->add_option("--eps", eb->eps, "retrieval error")->required();
  budget->add_option("--zeta", eb->zeta, "Schur-transform error")->capture_default_str();
  budget->add_option("--tau", eb->tau, "synthesis error")->capture_default_str();
  budget->add_option("--delta", eb->delta, "design error")->capture_default_str();
  budget->callback([&ctx, eb] {
    ctx.command = "bounds error-budget";
    const ErrorBudget b = mo_error_budget(eb->eps, eb->zeta, eb->tau, eb->delta);
    ctx.emit(Json{{"epsilon", quantity(b.epsilon, "diamond")},
                  {"zeta", quantity(b.zeta, "diamond")},
                  {"tau", quantity(b.tau, "diamond")},
                  {"delta", quantity(b.delta, "diamond")},
                  {"epsilon_mo", quantity(b.epsilon_mo, "diamond")}});
  });
}

}  // namespace qprog::cli
