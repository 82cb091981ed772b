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
#include "qprog/lightcone.hpp"
#include "qprog/processor.hpp"

namespace qprog::cli {
namespace {

struct SweepArgs {
  std::string kind;
  std::string csv;
  int from = 0;
  int to = 0;
  int n = 0;
};

std::string tightness(const SweepArgs& a) {
  Csv csv({"N", "D", "ell", "eps", "varpi", "lower_bits", "upper_bits", "lower_ratio", "upper_ratio"});
  for (const auto& p : tightness_sweep(a.from ? a.from : 6, a.to ? a.to : 20)) {
    csv.row({num(static_cast<long long>(p.n)), num(static_cast<long long>(p.depth)), num(p.ell),
             num(p.eps), num(p.varpi), num(p.lower_bits), num(p.upper_bits), num(p.lower_ratio),
             num(p.upper_ratio)});
  }
  return csv.str();
}

std::string tradeoff(const SweepArgs& a) {
  Csv csv({"N", "W", "primitive_bits", "reduced_bits", "ratio"});
  for (const auto& p : generic_tradeoff_sweep(a.from ? a.from : 4, a.to ? a.to : 20, 0.1)) {
    csv.row({num(p.n), num(p.w), num(p.primitive_bits), num(p.reduced_bits), num(p.ratio)});
  }
  return csv.str();
}

// Every bound over eps = 2^-j for a fixed architecture.
std::string epsilon(const SweepArgs& a) {
  const int n = a.n ? a.n : 64;
  const long long ell = static_cast<long long>(n) * 4;
  Csv csv({"eps", "qubit_covering_bits", "upper_bits", "lower_bits"});
  for (int j = a.from ? a.from : 0; j <= (a.to ? a.to : 20); ++j) {
    const double eps = std::ldexp(1.0, -j);
    const std::string lower =
        eps < 1.0 / 32.0 ? num(optimize_lower(n, eps, 0.5, 256).report.value_bits) : "";
    csv.row({num(eps), num(covering_log2_unitary(2, eps)),
             num(program_cost_upper(n, 2, ell, eps).value_bits), lower});
  }
  return csv.str();
}

// Fixed T = 2 supports per cone while the gates per cone m grow.
std::string structured(const SweepArgs& a) {
  const int n = 16;
  const int k = 2;
  const long long h = 4;
  const double eps = 0.01;
  Csv csv({"m_per_cone", "T", "ell", "reduced_bits", "primitive_bits", "ratio"});
  for (int j = a.from ? a.from : 1; j <= (a.to ? a.to : 16); ++j) {
    const long long m = 1LL << j;
    std::vector<ConeCost> cones(static_cast<std::size_t>(h), ConeCost{2, 4, m, 0.0});
    const TradeoffReport r = structured_tradeoff(cones, h * m, k, n, h, eps);
    csv.row({num(m), "2", num(h * m), num(r.reduced_bits), num(r.primitive_bits),
             num(r.reduced_bits / r.primitive_bits)});
  }
  return csv.str();
}

// Achieved error of one random k = 1 circuit as eps shrinks.
std::string programming(const SweepArgs& a, std::uint64_t seed) {
  const int n = a.n ? a.n : 6;
  const BrickworkCircuit c = random_brickwork(n, 4, 1, Geometry::line, seed);
  Csv csv({"eps", "per_gate_eps", "net_size", "total_cost_bits", "achieved_error"});
  for (int j = a.from; j <= (a.to ? a.to : 6); ++j) {
    const double eps = std::ldexp(1.0, -j);
    const ProgrammedCircuit p = program_circuit(c, eps);
    csv.row({num(eps), num(p.per_gate_eps), num(static_cast<long long>(p.net->size())),
             num(p.total_cost_bits), num(p.achieved_error)});
  }
  return csv.str();
}

}  // namespace

void register_sweep(CLI::App& app, RunContext& ctx) {
  auto a = std::make_shared<SweepArgs>();
  auto* sweep = app.add_subcommand("sweep", "CSV parameter sweeps");
  sweep->add_option("--kind", a->kind, "tightness|tradeoff|epsilon|structured|program")
      ->required()
      ->check(CLI::IsMember({"tightness", "tradeoff", "epsilon", "structured", "program"}));
  sweep->add_option("--csv", a->csv, "output path (stdout when omitted)");
  sweep->add_option("--from", a->from, "first sweep exponent (kind-specific default)");
  sweep->add_option("--to", a->to, "last sweep exponent (kind-specific default)");
  sweep->add_option("--n-qubits", a->n, "N where the kind has one");
  sweep->callback([&ctx, a] {
    ctx.command = "sweep " + a->kind;
    std::string text;
    if (a->kind == "tightness") text = tightness(*a);
    else if (a->kind == "tradeoff") text = tradeoff(*a);
    else if (a->kind == "epsilon") text = epsilon(*a);
    else if (a->kind == "structured") text = structured(*a);
    else text = programming(*a, ctx.require_seed());
    ctx.write_text(a->csv, text);
  });
}

}  // namespace qprog::cli
