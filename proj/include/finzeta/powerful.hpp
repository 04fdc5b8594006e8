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

// l-step k-powerful numbers: n such that every exponent ord_p n lies in
// {0, k, 2k, ..., (l-1)k} or is at least lk.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "finzeta/arith.hpp"

namespace finzeta {

struct StepPowerfulParams {
  int k = 1;
  int l = 1;

  void validate() const {
    if (k < 1 || l < 1) throw std::invalid_argument("step-powerful parameters must be positive");
  }

  /// Whether a prime may divide n to exactly this (positive) exponent.
  bool allows(int exponent) const {
    return exponent >= l * k || (exponent % k == 0 && exponent / k <= l - 1);
  }
};

inline bool is_step_powerful(std::uint64_t n, StepPowerfulParams params) {
  params.validate();
  if (n == 0) throw std::invalid_argument("is_step_powerful: n must be positive");
  for (const auto& [p, e] : factorize(n))
    if (!params.allows(e)) return false;
  return true;
}

inline std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// All l-step k-powerful n <= limit, ascending.
///
/// For k >= 2 every such n is powerful, so the candidates are generated
/// depth-first as products of admissible prime powers p^e (p <= sqrt(limit))
/// instead of factoring each n; the work is proportional to the output.
inline std::vector<std::uint64_t> sieve_step_powerful(std::uint64_t limit, StepPowerfulParams params) {
  params.validate();
  if (limit < 1) throw std::invalid_argument("sieve_step_powerful: bound must be positive");
  std::vector<std::uint64_t> out;
  if (params.k == 1) {
    out.resize(limit);
    for (std::uint64_t i = 0; i < limit; ++i) out[i] = i + 1;
    return out;
  }
  const std::vector<std::uint64_t> primes = primes_up_to(isqrt(limit));
  auto dfs = [&](auto&& self, std::size_t first, std::uint64_t cur) -> void {
    out.push_back(cur);
    const std::uint64_t room = limit / cur;
    for (std::size_t i = first; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (pow_bounded(p, params.k, room) == 0) break;
      std::uint64_t pe = 1;
      for (int e = 1;; ++e) {
        if (pe > room / p) break;
        pe *= p;
        if (e >= params.k && params.allows(e)) self(self, i + 1, cur * pe);
      }
    }
  };
  dfs(dfs, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// n = a_1^k a_2^{2k} ... a_l^{lk} * m with squarefree, pairwise coprime a_i
/// and m the part of n carried by exponents above lk.
struct CanonicalRep {
  std::vector<std::uint64_t> a;
  std::uint64_t m = 1;

  std::uint64_t reconstruct(int k) const {
    std::uint64_t n = m;
    for (std::size_t i = 0; i < a.size(); ++i)
      n = checked::mul(n, checked::pow(a[i], static_cast<unsigned>((i + 1) * k)));
    return n;
  }
};

inline CanonicalRep canonical_rep(std::uint64_t n, StepPowerfulParams params) {
  if (!is_step_powerful(n, params))
    throw std::invalid_argument("canonical_rep: n is not l-step k-powerful");
  CanonicalRep rep;
  rep.a.assign(params.l, 1);
  for (const auto& [p, e] : factorize(n)) {
    if (e % params.k == 0 && e / params.k <= params.l)
      rep.a[e / params.k - 1] *= p;
    else
      rep.m *= checked::pow(p, e);
  }
  return rep;
}

/// A K-powerful m written as b_1^K b_2^{K+1} ... b_K^{2K-1} with b_2..b_K
/// squarefree; returns (b_1, ..., b_K).
inline std::vector<std::uint64_t> powerful_decomposition(std::uint64_t m, int big_k) {
  if (big_k < 1) throw std::invalid_argument("powerful_decomposition: K must be positive");
  std::vector<std::uint64_t> b(big_k, 1);
  for (const auto& [p, e] : factorize(m)) {
    if (e < big_k) throw std::invalid_argument("powerful_decomposition: m is not K-powerful");
    const int r = e % big_k;
    if (r == 0) {
      b[0] *= checked::pow(p, e / big_k);
    } else {
      // one factor of b_{r+1} carries K + r; b_1 takes the rest
      b[r] *= p;
      b[0] *= checked::pow(p, (e - big_k - r) / big_k);
    }
  }
  return b;
}

}  // namespace finzeta
