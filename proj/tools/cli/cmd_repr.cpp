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

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "context.hpp"
#include "qprog/repr.hpp"

namespace qprog::cli {
namespace {

double log2_big(const BigCount& v) {
  return static_cast<double>(boost::multiprecision::log2(BigFloat(v)));
}

struct DnArgs {
  int n = 0;
  int d = 2;
};

struct CauchyArgs {
  int max_n = 8;
  int max_d = 4;
};

struct BinomialArgs {
  int max = 200;
};

}  // namespace

void register_repr(CLI::App& app, RunContext& ctx) {
  auto* repr = app.add_subcommand("repr", "Schur-Weyl combinatorics");
  repr->require_subcommand(1);

  auto dn = std::make_shared<DnArgs>();
  auto* dn_cmd = repr->add_subcommand("dn", "d_n = C(n + d^2 - 1, d^2 - 1) and its irrep split");
  dn_cmd->add_option("--n", dn->n, "copies n >= 0")->required();
  dn_cmd->add_option("--d", dn->d, "dimension d >= 1")->required();
  dn_cmd->callback([&ctx, dn] {
    ctx.command = "repr dn";
    const BigCount value = program_dimension_dn(dn->n, dn->d);
    Json blocks = Json::array();
    for (const auto& lambda : partitions(dn->n, dn->d)) {
      blocks.push_back({{"partition", lambda.parts()},
                        {"weyl_dimension", weyl_dimension(lambda, dn->d).str()}});
    }
    ctx.emit(Json{{"n", dn->n},
                  {"d", dn->d},
                  {"d_n", value.str()},
                  {"log2_d_n", quantity(log2_big(value), "bits")},
                  {"blocks", blocks}});
  });

  auto ca = std::make_shared<CauchyArgs>();
  auto* cauchy = repr->add_subcommand(
      "check-cauchy", "sum of squared Weyl dimensions equals d_n for all d, n up to the limits");
  cauchy->add_option("--max-n", ca->max_n, "largest n")->capture_default_str();
  cauchy->add_option("--max-d", ca->max_d, "largest d")->capture_default_str();
  cauchy->callback([&ctx, ca] {
    ctx.command = "repr check-cauchy";
    int checked = 0;
    int failed = 0;
    for (int d = 1; d <= ca->max_d; ++d) {
      for (int n = 0; n <= ca->max_n; ++n) {
        ++checked;
        if (!cauchy_identity_holds(n, d)) ++failed;
      }
    }
    ctx.emit(Json{{"check", "cauchy_identity"}, {"cases", checked}, {"failures", failed},
                  {"passed", failed == 0}});
  });

  auto bi = std::make_shared<BinomialArgs>();
  auto* binom = repr->add_subcommand("check-binomial",
                                     "C(m+k, k) against its convex lower bound for 0 <= m, k <= max");
  binom->add_option("--max", bi->max, "largest m and k")->capture_default_str();
  binom->callback([&ctx, bi] {
    ctx.command = "repr check-binomial";
    int checked = 0;
    int failed = 0;
    for (int m = 0; m <= bi->max; ++m) {
      for (int k = 0; k <= bi->max; ++k) {
        ++checked;
        if (!binomial_lb_holds(m, k)) ++failed;
      }
    }
    ctx.emit(Json{{"check", "binomial_lower_bound"}, {"cases", checked}, {"failures", failed},
                  {"passed", failed == 0}});
  });
}

}  // namespace qprog::cli
