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

// Infinite-modulus limits: the Riemann zeta function, Z^m_inf, the
// two-variable zeta coefficients, and coefficient identities for the
// step-powerful Dirichlet series.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "finzeta/arith.hpp"
#include "finzeta/exact.hpp"
#include "finzeta/finite_zeta.hpp"
#include "finzeta/powerful.hpp"
#include "finzeta/qpoly.hpp"

namespace finzeta {

namespace detail {

inline constexpr int kZetaCutoff = 1000;
inline constexpr int kZetaBernoulliTerms = 8;

// B_2, B_4, ..., B_18
inline constexpr std::array<long double, kZetaBernoulliTerms + 1> kBernoulli = {
    1.0L / 6,    -1.0L / 30,      1.0L / 42,      -1.0L / 30,     5.0L / 66,
    -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798};

// j-th Euler-Maclaurin correction B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}, j >= 1.
inline long double em_term(int j, long double s, long double cutoff) {
  long double rising = 1;
  for (int i = 0; i <= 2 * j - 2; ++i) rising *= s + i;
  long double fact = 1;
  for (int i = 2; i <= 2 * j; ++i) fact *= i;
  return kBernoulli[j - 1] / fact * rising * std::pow(cutoff, -s - 2 * j + 1);
}

}  // namespace detail

/// Bound on the Euler-Maclaurin remainder: for real s > 1 it does not exceed
/// the first omitted correction term in absolute value.
inline double riemann_zeta_error_bound(double s) {
  if (!(s > 1)) throw std::domain_error("riemann_zeta: s must exceed 1");
  return static_cast<double>(
      std::fabs(detail::em_term(detail::kZetaBernoulliTerms + 1, s, detail::kZetaCutoff)));
}

inline double riemann_zeta(double s) {
  if (!(s > 1)) throw std::domain_error("riemann_zeta: s must exceed 1");
  const long double ls = s;
  const long double cutoff = detail::kZetaCutoff;
  long double acc = 0;
  for (int n = detail::kZetaCutoff - 1; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -ls);
  acc += std::pow(cutoff, 1 - ls) / (ls - 1) + std::pow(cutoff, -ls) / 2;
  for (int j = 1; j <= detail::kZetaBernoulliTerms; ++j) acc += detail::em_term(j, ls, cutoff);
  return static_cast<double>(acc);
}

/// Z^m_inf(s) = zeta(s) zeta(2s) ... zeta(ms).
inline double zeta_m_inf(int m, double s) {
  if (m < 0) throw std::invalid_argument("zeta_m_inf: m must be nonnegative");
  double v = 1;
  for (int k = 1; k <= m; ++k) v *= riemann_zeta(k * s);
  return v;
}

struct TruncatedSum {
  double value = 0;
  double tail_bound = 0;  // |full - value| <= tail_bound
};

/// sum_{n > X} n^{-sigma} <= X^{1-sigma}/(sigma-1).
inline double power_tail_bound(std::uint64_t limit, double sigma) {
  return std::pow(static_cast<double>(limit), 1 - sigma) / (sigma - 1);
}

/// Direct sum of (n_1...n_m)^{-s} over chains n_1 | ... | n_m <= X.
/// The omitted chains have n_m > X, so the tail is at most
/// Z^{m-1}_inf(s) * sum_{n>X} n^{-s}.
inline TruncatedSum zeta_m_inf_truncated(int m, double s, std::uint64_t limit) {
  if (m < 1) throw std::invalid_argument("zeta_m_inf_truncated: m must be positive");
  if (!(s > 1)) throw std::domain_error("zeta_m_inf_truncated: s must exceed 1");
  if (limit < 1) throw std::invalid_argument("zeta_m_inf_truncated: bound must be positive");
  double acc = 0;
  for (std::uint64_t top = limit; top >= 1; --top) {
    const double top_term = std::pow(static_cast<double>(top), -s);
    if (m == 1) {
      acc += top_term;
      continue;
    }
    double inner = 0;
    for (const auto& chain : divisor_chains(top, m - 1)) {
      double prod = 1;
      for (std::uint64_t v : chain) prod *= static_cast<double>(v);
      inner += std::pow(prod, -s);
    }
    acc += top_term * inner;
  }
  return {acc, zeta_m_inf(m - 1, s) * power_tail_bound(limit, s)};
}

/// sum_{n <= X} Z^m_n(s) n^{-s}. Since 0 < Z^m_n(s) <= Z^m_inf(s) for real
/// s > 1, the tail is at most Z^m_inf(s) * sum_{n>X} n^{-s}.
inline TruncatedSum zeta_m_partial_sum(int m, double s, std::uint32_t limit) {
  if (m < 1) throw std::invalid_argument("zeta_m_partial_sum: m must be positive");
  if (!(s > 1)) throw std::domain_error("zeta_m_partial_sum: s must exceed 1");
  if (limit < 1) throw std::invalid_argument("zeta_m_partial_sum: bound must be positive");
  const auto spf = smallest_prime_factors(limit);
  double acc = 0;
  for (std::uint32_t n = limit; n >= 1; --n) {
    double z = 1;
    for (const auto& [p, e] : factorize_with(spf, n))
      z *= detail::local_chain_sum(std::pow(static_cast<double>(p), -s), e, m).real();
    acc += z * std::pow(static_cast<double>(n), -s);
  }
  return {acc, zeta_m_inf(m, s) * power_tail_bound(limit, s)};
}

/// Coefficients a_1..a_X of a Dirichlet series; index 0 is unused.
template <class T>
struct DirichletCoeffs {
  std::uint64_t bound = 0;
  std::vector<T> coeffs;

  DirichletCoeffs() = default;
  explicit DirichletCoeffs(std::uint64_t limit) : bound(limit), coeffs(limit + 1, T(0)) {
    if (limit < 1) throw std::invalid_argument("DirichletCoeffs: bound must be positive");
  }

  T& operator[](std::uint64_t n) { return coeffs.at(n); }
  const T& operator[](std::uint64_t n) const { return coeffs.at(n); }

  /// First index where the two arrays differ, or 0 when they agree.
  std::uint64_t first_mismatch(const DirichletCoeffs& other) const {
    if (bound != other.bound) throw std::invalid_argument("DirichletCoeffs: bounds differ");
    for (std::uint64_t n = 1; n <= bound; ++n)
      if (coeffs[n] != other.coeffs[n]) return n;
    return 0;
  }

  bool operator==(const DirichletCoeffs& other) const {
    return bound == other.bound && first_mismatch(other) == 0;
  }
};

/// Indicator of perfect c-th powers: the coefficients of zeta(cs).
inline DirichletCoeffs<std::int64_t> power_indicator(int c, std::uint64_t limit) {
  DirichletCoeffs<std::int64_t> out(limit);
  for (std::uint64_t r = 1;; ++r) {
    const std::uint64_t v = pow_bounded(r, c, limit);
    if (v == 0) break;
    out[v] = 1;
  }
  return out;
}

/// Coefficients of 1/zeta(cs): mu(r) at n = r^c.
inline DirichletCoeffs<std::int64_t> inverse_power_indicator(int c, std::uint64_t limit) {
  DirichletCoeffs<std::int64_t> out(limit);
  std::uint64_t root_max = 1;
  while (pow_bounded(root_max + 1, c, limit) != 0) ++root_max;
  const auto mu = moebius_table(static_cast<std::uint32_t>(root_max));
  for (std::uint64_t r = 1; r <= root_max; ++r) out[pow_bounded(r, c, limit)] = mu[r];
  return out;
}

/// (a * b)(n) = sum_{de = n} a(d) b(e) for n <= X; zero entries of a are skipped.
template <class T>
DirichletCoeffs<T> dirichlet_convolve(const DirichletCoeffs<T>& a, const DirichletCoeffs<T>& b) {
  if (a.bound != b.bound) throw std::invalid_argument("dirichlet_convolve: bounds differ");
  DirichletCoeffs<T> out(a.bound);
  const std::uint64_t limit = a.bound;
  for (std::uint64_t d = 1; d <= limit; ++d) {
    if (a.coeffs[d] == T(0)) continue;
    for (std::uint64_t e = 1; e <= limit / d; ++e) {
      if (b.coeffs[e] == T(0)) continue;
      if constexpr (std::is_same_v<T, std::int64_t>)
        out.coeffs[d * e] = checked::add(out.coeffs[d * e], checked::mul(a.coeffs[d], b.coeffs[e]));
      else
        out.coeffs[d * e] += a.coeffs[d] * b.coeffs[e];
    }
  }
  return out;
}

template <class T>
struct CoeffPair {
  DirichletCoeffs<T> lhs;
  DirichletCoeffs<T> rhs;
};

/// Two computations of the coefficient of n^{-t} in
/// sum_N Z^m_N(s) N^{-t} = zeta(t) zeta(t+s) ... zeta(t+ms):
/// lhs a_n = Z^m_n(s) from the chain sum, rhs b_n from convolving the m+1
/// sequences n^{-ks}, k = 0..m.
inline CoeffPair<Rational> zeta_m_st_coeffs(int m, long s, std::uint64_t limit) {
  if (m < 1) throw std::invalid_argument("zeta_m_st_coeffs: m must be positive");
  CoeffPair<Rational> out{DirichletCoeffs<Rational>(limit), DirichletCoeffs<Rational>(limit)};
  for (std::uint64_t n = 1; n <= limit; ++n) out.lhs[n] = eval_brute_exact(n, m, s);

  DirichletCoeffs<Rational> acc(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) acc[n] = 1;
  for (int k = 1; k <= m; ++k) {
    DirichletCoeffs<Rational> factor(limit);
    for (std::uint64_t n = 1; n <= limit; ++n) factor[n] = rpow(n, -s * k);
    acc = dirichlet_convolve(acc, factor);
  }
  out.rhs = std::move(acc);
  return out;
}

/// f_{k,l} as a coefficient array.
inline DirichletCoeffs<std::int64_t> step_powerful_indicator(int k, int l, std::uint64_t limit) {
  DirichletCoeffs<std::int64_t> out(limit);
  for (std::uint64_t n : sieve_step_powerful(limit, {k, l})) out[n] = 1;
  return out;
}

/// Coefficients of Z^{(k,...,k,1)}_inf(s) (l entries equal to k).
/// lhs: direct count of chains n_{l+1} | n_l^k | ... | n_1^k with
/// n_1^k ... n_l^k n_{l+1} = n. rhs: f_{k,l} convolved with zeta(jks), j = 2..l+1.
inline CoeffPair<std::int64_t> powerful_zeta_factorization(int k, int l, std::uint64_t limit) {
  StepPowerfulParams{k, l}.validate();
  CoeffPair<std::int64_t> out{DirichletCoeffs<std::int64_t>(limit), DirichletCoeffs<std::int64_t>(limit)};

  // level j picks n_j; `prev_pow` is n_{j-1}^k (unconstrained at j = 1)
  auto walk = [&](auto&& self, int level, std::uint64_t prod, std::uint64_t prev_pow) -> void {
    const std::uint64_t room = limit / prod;
    if (level == l + 1) {
      const std::uint64_t top = level == 1 ? room : std::min(room, prev_pow);
      for (std::uint64_t last = 1; last <= top; ++last)
        if (level == 1 || prev_pow % last == 0) ++out.lhs[prod * last];
      return;
    }
    for (std::uint64_t v = 1;; ++v) {
      const std::uint64_t vk = pow_bounded(v, k, room);
      if (vk == 0 || (level > 1 && vk > prev_pow)) break;
      if (level > 1 && prev_pow % vk != 0) continue;
      self(self, level + 1, prod * vk, vk);
    }
  };
  walk(walk, 1, 1, 0);

  auto acc = step_powerful_indicator(k, l, limit);
  for (int j = 2; j <= l + 1; ++j) acc = dirichlet_convolve(acc, power_indicator(j * k, limit));
  out.rhs = std::move(acc);
  return out;
}

struct FklCoeffs {
  DirichletCoeffs<std::int64_t> sieve;
  /// zeta(s) for k = 1; zeta(2s) zeta((2l+1)s) / zeta(2(2l+1)s) for k = 2.
  std::optional<DirichletCoeffs<std::int64_t>> closed_form;
};

inline FklCoeffs F_kl_coeffs(int k, int l, std::uint64_t limit) {
  FklCoeffs out{step_powerful_indicator(k, l, limit), std::nullopt};
  if (k == 1) {
    out.closed_form = power_indicator(1, limit);
  } else if (k == 2) {
    auto acc = dirichlet_convolve(power_indicator(2, limit), power_indicator(2 * l + 1, limit));
    out.closed_form = dirichlet_convolve(acc, inverse_power_indicator(2 * (2 * l + 1), limit));
  }
  return out;
}

/// 1 + q^k + ... + q^{(l-1)k} + q^{lk}/(1-q): the local factor of F_{k,l} at p, q = p^{-s}.
inline QSeries step_powerful_local_factor(int k, int l, int trunc) {
  StepPowerfulParams{k, l}.validate();
  std::vector<std::int64_t> c(trunc + 1, 0);
  for (int e = 0; e <= trunc; ++e)
    if (e == 0 || StepPowerfulParams{k, l}.allows(e)) c[e] = 1;
  return QSeries(std::move(c), trunc);
}

}  // namespace finzeta
