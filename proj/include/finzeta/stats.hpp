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

// Counting finite abelian p-groups through bounded partitions, empirical
// averages of Z^m_n, and multiple Eisenstein series coefficients.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "finzeta/arith.hpp"
#include "finzeta/exact.hpp"
#include "finzeta/finite_zeta.hpp"
#include "finzeta/limits.hpp"

namespace finzeta {

/// Bounds on a partition's largest part and on its number of parts.
struct PartitionConstraint {
  std::optional<int> max_part;
  std::optional<int> max_length;
};

/// Number of partitions of n with parts <= max_part and at most max_length parts.
inline std::uint64_t partitions_bounded(int n, PartitionConstraint c) {
  if (n < 0) throw std::invalid_argument("partitions_bounded: n must be nonnegative");
  const int parts = std::min(c.max_part.value_or(n), n);
  const int length = std::min(c.max_length.value_or(n), n);
  if (parts < 0 || length < 0) throw std::invalid_argument("partitions_bounded: negative bound");

  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  const auto key = std::make_tuple(n, parts, length);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // table[a][j] = partitions of j into at most `length` parts, each <= a,
  // via p(j, a, L) = p(j, a - 1, L) + p(j - a, a, L - 1).
  std::vector<std::vector<std::vector<std::uint64_t>>> table(
      parts + 1, std::vector<std::vector<std::uint64_t>>(length + 1, std::vector<std::uint64_t>(n + 1, 0)));
  for (int a = 0; a <= parts; ++a)
    for (int len = 0; len <= length; ++len)
      for (int j = 0; j <= n; ++j) {
        if (j == 0) {
          table[a][len][j] = 1;
        } else if (a > 0 && len > 0) {
          std::uint64_t v = table[a - 1][len][j];
          if (j >= a) v += table[a][len - 1][j - a];
          table[a][len][j] = v;
        }
      }
  const std::uint64_t result = table[parts][length][n];
  std::lock_guard lock(mu);
  memo.emplace(key, result);
  return result;
}

/// Multiplicative count with a uniform constraint at every prime.
inline std::uint64_t g_count(std::uint64_t n, PartitionConstraint c) {
  if (n == 0) throw std::invalid_argument("g_count: n must be positive");
  std::uint64_t v = 1;
  for (const auto& [p, e] : factorize(n)) v = checked::mul(v, partitions_bounded(e, c));
  return v;
}

/// g^m_inf(n): at each prime, partitions of ord_p n into parts <= m.
inline std::uint64_t g_infinite(std::uint64_t n, int m) {
  if (m < 1) throw std::invalid_argument("g_infinite: m must be positive");
  return g_count(n, {m, std::nullopt});
}

/// g^m_N(n): at each prime, parts <= m and length <= ord_p N.
inline std::uint64_t g_finite(std::uint64_t n, int m, std::uint64_t modulus) {
  if (n == 0 || modulus == 0) throw std::invalid_argument("g_finite: arguments must be positive");
  if (m < 1) throw std::invalid_argument("g_finite: m must be positive");
  const Factorization fm = factorize(modulus);
  std::uint64_t v = 1;
  for (const auto& [p, e] : factorize(n)) v = checked::mul(v, partitions_bounded(e, {m, fm.ord(p)}));
  return v;
}

struct CoefficientCheck {
  bool ok = true;
  std::uint64_t chain_total = 0;
  std::uint64_t first_mismatch = 0;  // 0 when ok
};

/// Whether the multiset of chain products n_1...n_m over chains dividing N
/// has counting function g^m_N on the divisors of N^m.
inline CoefficientCheck coefficient_identity_check(std::uint64_t modulus, int m) {
  if (modulus == 0 || m < 1) throw std::invalid_argument("coefficient_identity_check: bad arguments");
  std::map<std::uint64_t, std::uint64_t> counts;
  CoefficientCheck out;
  for (const auto& chain : divisor_chains(modulus, m)) {
    std::uint64_t prod = 1;
    for (std::uint64_t v : chain) prod = checked::mul(prod, v);
    ++counts[prod];
    ++out.chain_total;
  }
  Factorization power = factorize(modulus);
  for (auto& pe : power.entries) pe.exponent *= m;
  for (std::uint64_t d : divisors(power)) {
    auto it = counts.find(d);
    const std::uint64_t seen = it == counts.end() ? 0 : it->second;
    if (seen != g_finite(d, m, modulus)) {
      out.ok = false;
      out.first_mismatch = d;
      return out;
    }
    if (it != counts.end()) counts.erase(it);
  }
  if (!counts.empty()) {
    out.ok = false;
    out.first_mismatch = counts.begin()->first;
  }
  return out;
}

enum class AverageKind { kGroupCount, kZetaAtSigma, kZetaAtZero };

inline std::string to_string(AverageKind k) {
  switch (k) {
    case AverageKind::kGroupCount: return "g_m_inf";
    case AverageKind::kZetaAtSigma: return "Z_at_sigma";
    case AverageKind::kZetaAtZero: return "Z_at_zero";
  }
  return "?";
}

inline std::optional<AverageKind> parse_average_kind(const std::string& s) {
  if (s == "g_m_inf") return AverageKind::kGroupCount;
  if (s == "Z_at_sigma") return AverageKind::kZetaAtSigma;
  if (s == "Z_at_zero") return AverageKind::kZetaAtZero;
  return std::nullopt;
}

struct AveragePoint {
  std::uint64_t x = 0;
  double partial_sum = 0;
  double ratio = 0;  // partial_sum / (x^beta (log x)^alpha)
};

struct AverageResult {
  AverageKind kind{};
  int m = 0;
  double sigma = 0;
  double beta = 1;
  int alpha = 0;
  double empirical_constant = 0;
  /// c from the residue at the rightmost pole, via a Tauberian argument.
  double predicted_constant = 0;
  /// c / beta: the partial-sum constant once x^{beta-1} is integrated.
  double corrected_constant = 0;
  std::vector<AveragePoint> curve;
  std::string note;
};

/// Partial sums of a_n over n <= X against the main term x^beta (log x)^alpha:
///   kGroupCount  a_n = g^m_inf(n),  beta = 1, alpha = 0
///   kZetaAtSigma a_n = Z^m_n(sigma), beta = max(1, 1 - m sigma), alpha = 0
///   kZetaAtZero  a_n = Z^m_n(0),    beta = 1, alpha = m
/// The ratio is also recorded at every power of ten from 10^4 up to X.
inline AverageResult average_experiment(AverageKind kind, int m, double sigma, std::uint32_t limit) {
  if (m < 1) throw std::invalid_argument("average_experiment: m must be positive");
  if (limit < 1000) throw std::invalid_argument("average_experiment: X must be at least 1000");
  if (kind == AverageKind::kZetaAtSigma && sigma == 0)
    throw std::invalid_argument("average_experiment: use Z_at_zero for sigma = 0");

  AverageResult r;
  r.kind = kind;
  r.m = m;
  r.sigma = kind == AverageKind::kZetaAtSigma ? sigma : 0;
  switch (kind) {
    case AverageKind::kGroupCount:
      r.predicted_constant = 1;
      for (int k = 2; k <= m; ++k) r.predicted_constant *= riemann_zeta(k);
      break;
    case AverageKind::kZetaAtSigma: {
      const double tau = std::fabs(sigma);
      r.beta = sigma > 0 ? 1 : 1 + m * tau;
      r.predicted_constant = 1;
      for (int k = 1; k <= m; ++k) r.predicted_constant *= riemann_zeta(k * tau + 1);
      break;
    }
    case AverageKind::kZetaAtZero: {
      r.alpha = m;
      double fact = 1;
      for (int k = 2; k <= m; ++k) fact *= k;
      r.predicted_constant = 1 / fact;
      break;
    }
  }
  r.corrected_constant = r.predicted_constant / r.beta;

  // Local values a_{p^e} depend on p only through p^{-sigma}.
  const int max_exp = static_cast<int>(std::log2(static_cast<double>(limit))) + 1;
  std::vector<double> shape(max_exp + 1, 1.0);
  if (kind == AverageKind::kGroupCount) {
    for (int e = 0; e <= max_exp; ++e) shape[e] = static_cast<double>(partitions_bounded(e, {m, std::nullopt}));
  } else if (kind == AverageKind::kZetaAtZero) {
    for (int e = 0; e <= max_exp; ++e) shape[e] = static_cast<double>(binomial(e + m, m));
  }

  const auto spf = smallest_prime_factors(limit);
  std::uint64_t checkpoint = 10000;
  double acc = 0;
  auto record = [&](std::uint64_t x) {
    const double lx = std::log(static_cast<double>(x));
    const double main = std::pow(static_cast<double>(x), r.beta) * std::pow(lx, r.alpha);
    r.curve.push_back({x, acc, acc / main});
  };
  for (std::uint32_t n = 1; n <= limit; ++n) {
    double a = 1;
    for (const auto& [p, e] : factorize_with(spf, n)) {
      if (kind == AverageKind::kZetaAtSigma)
        a *= detail::local_chain_sum(std::pow(static_cast<double>(p), -sigma), e, m).real();
      else
        a *= shape[e];
    }
    acc += a;
    if (n == checkpoint) {
      record(n);
      checkpoint *= 10;
    }
  }
  if (r.curve.empty() || r.curve.back().x != limit) record(limit);
  r.empirical_constant = r.curve.back().ratio;
  if (kind == AverageKind::kZetaAtZero)
    r.note = "log-power main term: lower-order x (log x)^(m-1) terms decay only like 1/log x";
  else if (r.beta != 1)
    r.note = "beta > 1: partial sums approach c/beta, not c";
  return r;
}

/// Coefficients c_n = Z^m_n(1 - s), n = 1..D, of the multiple Eisenstein series.
struct EisensteinSeries {
  int m = 1;
  std::complex<double> s;
  std::vector<std::complex<double>> coeffs;  // coeffs[n - 1] = c_n

  std::size_t trunc() const { return coeffs.size(); }
  std::complex<double> operator[](std::size_t n) const { return coeffs.at(n - 1); }
};

inline EisensteinSeries eisenstein_coeffs(int m, std::complex<double> s, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("eisenstein_coeffs: truncation must be positive");
  EisensteinSeries e{m, s, {}};
  e.coeffs.reserve(trunc);
  for (std::size_t n = 1; n <= trunc; ++n) e.coeffs.push_back(eval_brute(n, m, 1.0 - s));
  return e;
}

/// Exact coefficients for integer s.
inline std::vector<Rational> eisenstein_coeffs_exact(int m, long s, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("eisenstein_coeffs: truncation must be positive");
  std::vector<Rational> out;
  out.reserve(trunc);
  for (std::size_t n = 1; n <= trunc; ++n) out.push_back(eval_brute_exact(n, m, 1 - s));
  return out;
}

struct EisensteinCheck {
  bool ok = true;
  bool exact = false;
  double max_rel_error = 0;
  std::uint64_t first_failure = 0;  // 0 when ok
};

inline constexpr double kEisensteinRelTol = 1e-10;

/// Compares sum_{N l = n} sigma_s(N) N^s with Z^2_n(-s) for n <= D; exact
/// rational comparison when s is an integer.
inline EisensteinCheck eisen1_check(std::complex<double> s, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("eisen1_check: truncation must be positive");
  EisensteinCheck out;
  const bool integral = s.imag() == 0 && std::floor(s.real()) == s.real() && std::fabs(s.real()) < 64;
  out.exact = integral;
  for (std::uint64_t n = 1; n <= trunc; ++n) {
    const auto outer = divisors(n);
    if (integral) {
      const long k = static_cast<long>(s.real());
      Rational lhs = 0;
      for (std::uint64_t big_n : outer) lhs += sigma(k, big_n) * rpow(big_n, k);
      if (lhs != eval_brute_exact(n, 2, -k)) {
        out.ok = false;
        out.first_failure = n;
        return out;
      }
    } else {
      std::complex<double> lhs = 0;
      for (std::uint64_t big_n : outer) {
        std::complex<double> sig = 0;
        for (std::uint64_t d : divisors(big_n)) sig += std::pow(static_cast<double>(d), s);
        lhs += sig * std::pow(static_cast<double>(big_n), s);
      }
      const std::complex<double> rhs = eval_brute(n, 2, -s);
      const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      out.max_rel_error = std::max(out.max_rel_error, rel);
      if (rel > kEisensteinRelTol && out.ok) {
        out.ok = false;
        out.first_failure = n;
      }
    }
  }
  return out;
}

}  // namespace finzeta
