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

#include "context.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "qprog/error.hpp"

namespace qprog::cli {

std::optional<std::uint64_t> RunContext::seed() const {
  if (seed_option == nullptr || seed_option->count() == 0) return std::nullopt;
  return *seed_value;
}

std::uint64_t RunContext::require_seed() const {
  const auto s = seed();
  if (!s) fail(ErrorCode::Validation, command + " is stochastic and requires --seed");
  return *s;
}

void RunContext::emit(const Json& doc) { out << doc.dump(2) << '\n'; }

void RunContext::write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::InvalidParams, "cannot write " + path);
  file << text;
  files.emplace_back(path, fnv1a_hex(text));
}

Json quantity(double value, const std::string& units) {
  Json q;
  q["value"] = value;
  q["units"] = units;
  return q;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::InvalidParams, "cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Csv::Csv(std::vector<std::string> header) : width_(header.size()) { row(header); }

Csv& Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) fail(ErrorCode::Numeric, "CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
  return *this;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(long long v) { return std::to_string(v); }

}  // namespace qprog::cli
