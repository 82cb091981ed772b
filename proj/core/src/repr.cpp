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

#include "qprog/repr.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "qprog/error.hpp"

namespace qprog {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) fail(ErrorCode::InvalidParams, "partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      fail(ErrorCode::InvalidParams, "partition parts must be non-increasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Partition> partitions(int n, int d) {
  if (n < 0) fail(ErrorCode::InvalidParams, "n must be >= 0");
  if (d < 1) fail(ErrorCode::InvalidParams, "d must be >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first gives lexicographically descending order.
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == d) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

BigCount binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount weyl_dimension(const Partition& lambda, int d) {
  if (d < 1) fail(ErrorCode::InvalidParams, "d must be >= 1");
  if (lambda.length() > d) {
    fail(ErrorCode::TooManyParts, "partition has more than d = " + std::to_string(d) + " parts");
  }
  BigCount num = 1;
  BigCount den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= lambda.part(i) - lambda.part(j) + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

BigCount program_dimension_dn(int n, int d) {
  if (n < 0) fail(ErrorCode::InvalidParams, "n must be >= 0");
  if (d < 1) fail(ErrorCode::InvalidParams, "d must be >= 1");
  return binomial(n + d * d - 1, d * d - 1);
}

BigFloat binomial_lb_rhs(int m, int k) {
  if (m < 0 || k < 0) fail(ErrorCode::InvalidParams, "m and k must be >= 0");
  using boost::multiprecision::log;
  const BigFloat total = BigFloat(m + k + 1);
  const BigFloat log_total = log(total);
  const BigFloat log_value = -log_total +
                             BigFloat(m + 1) * (log_total - log(BigFloat(m + 1))) +
                             BigFloat(k + 1) * (log_total - log(BigFloat(k + 1)));
  return boost::multiprecision::exp(log_value);
}

bool binomial_lb_holds(int m, int k, double rel_slack) {
  const BigFloat lhs(binomial(m + k, k));
  return lhs >= binomial_lb_rhs(m, k) * BigFloat(1.0 - rel_slack);
}

bool cauchy_identity_holds(int n, int d) {
  BigCount sum = 0;
  for (const auto& lambda : partitions(n, d)) {
    const BigCount dim = weyl_dimension(lambda, d);
    sum += dim * dim;
  }
  return sum == program_dimension_dn(n, d);
}

std::vector<Partition> add_box_branching(const Partition& lambda, int d) {
  if (lambda.length() > d) fail(ErrorCode::TooManyParts, "partition has more than d parts");
  std::vector<Partition> out;
  for (int row = 0; row < std::min(d, lambda.length() + 1); ++row) {
    if (row > 0 && lambda.part(row - 1) < lambda.part(row) + 1) continue;
    std::vector<int> parts(static_cast<std::size_t>(std::max(lambda.length(), row + 1)), 0);
    for (int i = 0; i < lambda.length(); ++i) parts[static_cast<std::size_t>(i)] = lambda.part(i);
    ++parts[static_cast<std::size_t>(row)];
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::complex<double> schur_character(const Partition& lambda, std::complex<double> x,
                                     std::complex<double> y) {
  if (lambda.length() > 2) {
    fail(ErrorCode::UnsupportedRank, "schur_character supports at most two rows");
  }
  if (std::abs(std::abs(x) - 1.0) > 1e-9 || std::abs(std::abs(y) - 1.0) > 1e-9) {
    fail(ErrorCode::InvalidParams, "eigenvalues must lie on the unit circle");
  }
  const int m = lambda.part(0) - lambda.part(1);
  // h_m(x, y) as a direct sum; stable at x = y where the quotient form is 0/0.
  std::complex<double> h = 0.0;
  std::complex<double> xp = 1.0;
  for (int i = 0; i <= m; ++i) {
    h += xp * std::pow(y, m - i);
    xp *= x;
  }
  return std::pow(x * y, lambda.part(1)) * h;
}

}  // namespace qprog
