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
// Shared state of one CLI invocation.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace qprog::cli {

using Json = nlohmann::ordered_json;

struct RunContext {
  std::ostringstream out;
  const CLI::Option* seed_option = nullptr;
  const std::uint64_t* seed_value = nullptr;
  std::string command;
  std::vector<std::pair<std::string, std::string>> files;  // path, digest

  std::optional<std::uint64_t> seed() const;
  /// The seed, or ValidationError naming the command that needs one.
  std::uint64_t require_seed() const;
  void emit(const Json& doc);
  /// Writes `text` to `path`, or to stdout when the path is empty.
  void write_text(const std::string& path, const std::string& text);
};

/// {"value": v, "units": u}
Json quantity(double value, const std::string& units);

std::string fnv1a_hex(const std::string& bytes);
std::string read_file(const std::string& path);

/// Minimal CSV table with a fixed header.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header);
  Csv& row(const std::vector<std::string>& cells);
  std::string str() const { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

std::string num(double v);
std::string num(long long v);

void register_bounds(CLI::App& app, RunContext& ctx);
void register_repr(CLI::App& app, RunContext& ctx);
void register_lightcone(CLI::App& app, RunContext& ctx);
void register_program(CLI::App& app, RunContext& ctx);
void register_mosim(CLI::App& app, RunContext& ctx);
void register_sweep(CLI::App& app, RunContext& ctx);
void register_verify(CLI::App& app, RunContext& ctx);

}  // namespace qprog::cli
