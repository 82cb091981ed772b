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
// Schur-Weyl combinatorics: partitions, Weyl dimensions, d_n and the
// binomial lower bound.

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qprog {

using BigCount = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Young diagram shape. Parts are non-increasing; trailing zeros are dropped
/// on construction so (2, 1, 0) == (2, 1).
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidParams if the parts are negative or increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n into at most d parts, lexicographically descending.
std::vector<Partition> partitions(int n, int d);

BigCount binomial(int n, int k);

/// dim W_lambda^d = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
BigCount weyl_dimension(const Partition& lambda, int d);

/// d_n = C(n + d^2 - 1, d^2 - 1).
BigCount program_dimension_dn(int n, int d);

/// (1/(m+k+1)) (1 + k/(m+1))^{m+1} (1 + m/(k+1))^{k+1}, evaluated in log space.
BigFloat binomial_lb_rhs(int m, int k);

/// C(m+k, k) >= binomial_lb_rhs(m, k) with relative slack `rel_slack`.
bool binomial_lb_holds(int m, int k, double rel_slack = 1e-9);

/// sum over lambda of (dim W_lambda^d)^2 compared against d_n.
bool cauchy_identity_holds(int n, int d);

/// Shapes of lambda (x) box: lambda with one box added to some row, kept
/// when the result is a partition with at most d parts.
std::vector<Partition> add_box_branching(const Partition& lambda, int d);

/// Two-row Schur polynomial s_lambda(x, y) = (xy)^{lambda_2} h_m(x, y),
/// m = lambda_1 - lambda_2. x and y must lie on the unit circle.
std::complex<double> schur_character(const Partition& lambda, std::complex<double> x,
                                     std::complex<double> y);

}  // namespace qprog
