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
#include "qprog/mosim.hpp"

namespace qprog::cli {
namespace {

struct MosimArgs {
  int n = 1;
  long long samples = 100000;
  std::string ensemble = "haar";
  std::vector<double> q;
  std::uint64_t u_seed = 0;
  double zeta = 0.2;
  double scale = 1.0;
};

Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

void add_common(CLI::App* cmd, MosimArgs& a) {
  cmd->add_option("--n", a.n, "copies, 1 or 2")->capture_default_str();
  cmd->add_option("--samples", a.samples, "Monte-Carlo samples (>= 1000)")->capture_default_str();
  cmd->add_option("--q", a.q, "probe weights over partitions(n, 2), largest shape first");
}

DenseMatrix target_unitary(const CLI::App* cmd, const MosimArgs& a) {
  if (cmd->get_option("--u-seed")->count() == 0) return DenseMatrix::Identity(2, 2);
  return haar_unitary(2, a.u_seed);
}

std::uint64_t seed_for(const RunContext& ctx, UnitaryEnsemble e) {
  return e == UnitaryEnsemble::haar ? ctx.require_seed() : ctx.seed().value_or(0);
}

}  // namespace

void register_mosim(CLI::App& app, RunContext& ctx) {
  auto* mosim = app.add_subcommand("mosim", "measure-and-operate channel simulation (d = 2)");
  mosim->require_subcommand(1);

  auto ea = std::make_shared<MosimArgs>();
  auto* est = mosim->add_subcommand("estimate-p", "depolarizing coefficient from characters");
  add_common(est, *ea);
  est->add_option("--ensemble", ea->ensemble, "haar|clifford")->capture_default_str();
  est->add_option("--u-seed", ea->u_seed, "target U = Haar sample with this seed (default I)");
  est->callback([&ctx, ea, est] {
    ctx.command = "mosim estimate-p";
    const UnitaryEnsemble e = ensemble_from_string(ea->ensemble);
    const MOEstimate r = estimate_p(target_unitary(est, *ea), {ea->n, ea->q}, ea->samples, e,
                                    seed_for(ctx, e));
    ctx.emit(Json{{"n", ea->n},
                  {"ensemble", to_string(e)},
                  {"samples", r.samples},
                  {"p_hat", quantity(r.p_hat, "probability")},
                  {"stderr", quantity(r.stderr_p, "probability")}});
  });

  auto sa = std::make_shared<MosimArgs>();
  auto* sim = mosim->add_subcommand("simulate", "Choi matrix of the simulated channel");
  add_common(sim, *sa);
  sim->add_option("--ensemble", sa->ensemble, "haar|clifford")->capture_default_str();
  sim->add_option("--u-seed", sa->u_seed, "target U = Haar sample with this seed (default I)");
  sim->callback([&ctx, sa, sim] {
    ctx.command = "mosim simulate";
    const UnitaryEnsemble e = ensemble_from_string(sa->ensemble);
    const MOEstimate r = simulate_mo_channel(target_unitary(sim, *sa), {sa->n, sa->q}, sa->samples,
                                             e, seed_for(ctx, e));
    ctx.emit(Json{{"n", sa->n},
                  {"ensemble", to_string(e)},
                  {"samples", r.samples},
                  {"p_hat", quantity(r.p_hat, "probability")},
                  {"stderr", quantity(r.stderr_p, "probability")},
                  {"mean_weight", quantity(r.mean_weight, "probability")},
                  {"fit_residual", quantity(r.fit_residual, "trace_norm")},
                  {"fit_tolerance", quantity(r.fit_tolerance, "trace_norm")},
                  {"choi", matrix_json(r.choi_hat)}});
  });

  auto za = std::make_shared<MosimArgs>();
  auto* zeta = mosim->add_subcommand("zeta", "channel deviation under a perturbed measurement seed");
  add_common(zeta, *za);
  zeta->add_option("--zeta", za->zeta, "perturbation size in (0, 0.5]")->capture_default_str();
  zeta->add_option("--scale", za->scale, "fraction of zeta actually applied")->capture_default_str();
  zeta->callback([&ctx, za] {
    ctx.command = "mosim zeta";
    const ZetaCheck z =
        zeta_perturbation_check({za->n, za->q}, za->zeta, za->samples, ctx.require_seed(), za->scale);
    ctx.emit(Json{{"n", za->n},
                  {"zeta", z.zeta},
                  {"perturbation", quantity(z.perturbation_trace_norm, "trace_norm")},
                  {"deviation", quantity(z.deviation, "diamond")},
                  {"bound", quantity(z.bound, "diamond")},
                  {"slack", quantity(z.slack, "diamond")}});
  });
}

}  // namespace qprog::cli
