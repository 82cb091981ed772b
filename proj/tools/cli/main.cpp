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

// qprog: resource estimates and numerical checks for programming brickwork
// quantum circuits.
//
// stdout carries the result (JSON, or CSV for sweeps) and is byte-identical
// for identical arguments. A one-line run manifest goes to stderr.
// Exit codes: 0 success, 1 usage or validation error, 2 numeric failure.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "context.hpp"
#include "qprog/error.hpp"
#include "qprog/parallel.hpp"

#ifndef QPROG_VERSION
#define QPROG_VERSION "dev"
#endif

namespace {

using qprog::cli::Json;

void print_manifest(const qprog::cli::RunContext& ctx, int argc, char** argv, double seconds,
                    int exit_code) {
  Json args = Json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  Json files = Json::array();
  for (const auto& [path, digest] : ctx.files) files.push_back({{"path", path}, {"fnv1a", digest}});
  Json m;
  m["command"] = ctx.command;
  m["args"] = args;
  const auto seed = ctx.seed();
  m["seed"] = seed ? Json(*seed) : Json(nullptr);
  m["version"] = QPROG_VERSION;
  m["threads"] = qprog::configured_threads();
  m["wall_time_s"] = seconds;
  m["exit_code"] = exit_code;
  m["stdout_fnv1a"] = qprog::cli::fnv1a_hex(ctx.out.str());
  m["files"] = files;
  std::cerr << Json{{"manifest", m}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  qprog::cli::RunContext ctx;
  CLI::App app{"qprog: program-cost bounds and numerical checks for brickwork circuits"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "64-bit seed for stochastic commands");
  app.add_flag("--json", "emit JSON (the default for non-sweep commands)");
  ctx.seed_option = seed_opt;
  ctx.seed_value = &seed;

  qprog::cli::register_bounds(app, ctx);
  qprog::cli::register_repr(app, ctx);
  qprog::cli::register_lightcone(app, ctx);
  qprog::cli::register_program(app, ctx);
  qprog::cli::register_mosim(app, ctx);
  qprog::cli::register_sweep(app, ctx);
  qprog::cli::register_verify(app, ctx);

  int code = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e) == 0 ? 0 : 1;
  } catch (const qprog::Error& e) {
    std::cerr << e.what() << '\n';
    code = e.code() == qprog::ErrorCode::Numeric ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    code = 2;
  }
  if (code == 0) std::cout << ctx.out.str() << std::flush;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  print_manifest(ctx, argc, argv, seconds, code);
  return code;
}
