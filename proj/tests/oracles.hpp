/*
 * Copyright 2026 The finzeta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Deliberately naive reference implementations used as test oracles.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, int>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Every chain n_1 | ... | n_m | N, built top-down from n_m.
inline std::vector<std::vector<std::uint64_t>> chains(std::uint64_t n, int m) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur(m);
  std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t above) {
    if (i < 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t d : divisors(above)) {
      cur[i] = d;
      rec(i - 1, d);
    }
  };
  rec(m - 1, n);
  return out;
}

inline std::complex<double> zeta_chain_sum(std::uint64_t n, int m, std::complex<double> s) {
  std::complex<double> acc = 0;
  for (const auto& c : chains(n, m)) {
    double prod = 1;
    for (auto v : c) prod *= static_cast<double>(v);
    acc += std::pow(prod, -s);
  }
  return acc;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

/// Coefficients of a univariate polynomial product, constant term first.
inline std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace oracle
