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

// Prime factorization, divisor-chain enumeration and multiplicative
// functions. Everything else in the library is built on these.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "finzeta/exact.hpp"

namespace finzeta {

struct PrimePower {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// N = prod p^e, primes strictly increasing; empty means N = 1.
struct Factorization {
  std::vector<PrimePower> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  auto begin() const { return entries.begin(); }
  auto end() const { return entries.end(); }

  /// ord_p N; 0 when p does not divide N.
  int ord(std::uint64_t p) const {
    for (const auto& pp : entries)
      if (pp.prime == p) return pp.exponent;
    return 0;
  }

  /// Reconstructs N; throws std::overflow_error past 2^64.
  std::uint64_t value() const {
    std::uint64_t n = 1;
    for (const auto& pp : entries) n = checked::mul(n, checked::pow(pp.prime, pp.exponent));
    return n;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Primes below 2^16, built once.
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = detail::powmod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Trial division below 2^16, then Miller-Rabin and Pollard rho.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  for (std::uint32_t p : detail::small_primes()) {
    if (std::uint64_t{p} * p > n) break;
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.entries.push_back({p, e});
  }
  if (n == 1) return f;

  // No factor below 2^16 remains, so anything below 2^32 is prime.
  std::vector<std::uint64_t> stack{n}, large;
  while (!stack.empty()) {
    std::uint64_t v = stack.back();
    stack.pop_back();
    if (v < (std::uint64_t{1} << 32) || is_prime(v)) {
      large.push_back(v);
      continue;
    }
    std::uint64_t d = detail::pollard_brent(v);
    stack.push_back(d);
    stack.push_back(v / d);
  }
  std::sort(large.begin(), large.end());
  for (std::uint64_t p : large) {
    if (!f.entries.empty() && f.entries.back().prime == p)
      ++f.entries.back().exponent;
    else
      f.entries.push_back({p, 1});
  }
  std::sort(f.entries.begin(), f.entries.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

/// Checks the Factorization invariants; throws std::invalid_argument.
inline void validate(const Factorization& f) {
  std::uint64_t prev = 0;
  for (const auto& [p, e] : f.entries) {
    if (p <= prev) throw std::invalid_argument("factorization primes must be strictly increasing");
    if (!is_prime(p)) throw std::invalid_argument("factorization entry is not prime");
    if (e < 1) throw std::invalid_argument("factorization exponents must be positive");
    prev = p;
  }
}

/// All primes <= limit, ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

/// Smallest-prime-factor table on [0, limit]; spf[0] = spf[1] = 0.
inline std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(std::size_t{limit} + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
  }
  return spf;
}

/// Factorization read off a smallest-prime-factor table.
inline Factorization factorize_with(const std::vector<std::uint32_t>& spf, std::uint64_t n) {
  Factorization f;
  while (n > 1) {
    std::uint32_t p = spf[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.entries.push_back({p, e});
  }
  return f;
}

/// Moebius function on [0, limit] (index 0 unused).
inline std::vector<int> moebius_table(std::uint32_t limit) {
  std::vector<int> mu(std::size_t{limit} + 1, 1);
  mu[0] = 0;
  std::vector<bool> composite(std::size_t{limit} + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t j = p; j <= limit; j += p) {
      if (j > p) composite[j] = true;
      mu[j] = -mu[j];
    }
    for (std::uint64_t j = p * p; j <= limit; j += p * p) mu[j] = 0;
  }
  return mu;
}

/// Binomial coefficient with overflow detection.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

/// All divisors of N, ascending.
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> ds{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = ds.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

/// prod over prime powers p^e || N of local(p, e); the empty product is T{1}.
template <class Local>
auto multiplicative_lift(Local&& local, const Factorization& f) {
  using T = std::decay_t<decltype(local(std::uint64_t{2}, 1))>;
  T acc(1);
  for (const auto& [p, e] : f) acc *= local(p, e);
  return acc;
}

/// sigma_k(N) = sum_{d | N} d^k, exact for any integer k.
inline Rational sigma(long k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma: N must be positive");
  Rational acc(0);
  for (std::uint64_t d : divisors(n)) acc += rpow(d, k);
  acc.canonicalize();
  return acc;
}

/// n_1 | n_2 | ... | n_m.
using DivisorChain = std::vector<std::uint64_t>;

/// Lazily enumerates every chain n_1 | ... | n_m | N exactly once.
///
/// Each prime is handled independently as an exponent chain
/// 0 <= j_1 <= ... <= j_m <= ord_p N; the first prime varies fastest and
/// within a prime the lowest index varies fastest, so for N = 4, m = 2 the
/// order is (1,1), (1,2), (2,2), (1,4), (2,4), (4,4).
class DivisorChains {
 public:
  DivisorChains(std::uint64_t n, int m) : DivisorChains(factorize(n), m) {}

  DivisorChains(Factorization f, int m) : f_(std::move(f)), m_(m) {
    if (m < 1) throw std::invalid_argument("divisor_chains: m must be positive");
  }

  /// prod_p binom(ord_p N + m, m).
  std::uint64_t count() const {
    return multiplicative_lift(
        [this](std::uint64_t, int e) { return binomial(static_cast<std::uint64_t>(e) + m_, m_); },
        f_);
  }

  int length() const { return m_; }
  const Factorization& factorization() const { return f_; }

  class iterator {
   public:
    using value_type = DivisorChain;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(const DivisorChains* owner) : owner_(owner) {
      const auto& f = owner_->f_;
      exps_.assign(f.size() * owner_->m_, 0);
      powers_.resize(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        powers_[i].push_back(1);
        for (int k = 0; k < f.entries[i].exponent; ++k)
          powers_[i].push_back(powers_[i].back() * f.entries[i].prime);
      }
      chain_.assign(owner_->m_, 1);
    }

    const DivisorChain& operator*() const { return chain_; }
    const DivisorChain* operator->() const { return &chain_; }

    /// Exponent of the idx-th prime of N in n_{i+1}.
    int exponent(std::size_t prime_idx, int i) const {
      return exps_[prime_idx * owner_->m_ + i];
    }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    void advance() {
      const int m = owner_->m_;
      const auto& f = owner_->f_;
      for (std::size_t pi = 0; pi < f.size(); ++pi) {
        int* j = exps_.data() + pi * m;
        const int e = f.entries[pi].exponent;
        for (int i = 0; i < m; ++i) {
          const int cap = i + 1 < m ? j[i + 1] : e;
          if (j[i] < cap) {
            ++j[i];
            std::fill(j, j + i, 0);
            rebuild();
            return;
          }
        }
        std::fill(j, j + m, 0);  // wrapped; carry into the next prime
      }
      done_ = true;
    }

    void rebuild() {
      const int m = owner_->m_;
      for (int i = 0; i < m; ++i) {
        std::uint64_t v = 1;
        for (std::size_t pi = 0; pi < powers_.size(); ++pi) v *= powers_[pi][exps_[pi * m + i]];
        chain_[i] = v;
      }
    }

    const DivisorChains* owner_ = nullptr;
    std::vector<int> exps_;
    std::vector<std::vector<std::uint64_t>> powers_;
    DivisorChain chain_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Factorization f_;
  int m_;
};

inline DivisorChains divisor_chains(std::uint64_t n, int m) { return DivisorChains(n, m); }

}  // namespace finzeta
