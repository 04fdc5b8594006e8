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

// The multiple finite zeta function
//
//   Z^m_N(s) = sum_{n_1 | n_2 | ... | n_m | N} (n_1 n_2 ... n_m)^{-s}
//
// evaluated by direct summation over divisor chains and through its Euler
// product, together with the multivariable version Z^gamma_N(t_1..t_m),
// the zero set on the imaginary axis, and exact special values.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "finzeta/arith.hpp"
#include "finzeta/qpoly.hpp"

namespace finzeta {

using ZetaPoint = std::complex<double>;

namespace detail {

// n^{-s} = exp(-s ln n) with the real logarithm.
inline std::complex<double> npow(double log_n, ZetaPoint s) { return std::exp(-s * log_n); }

inline void check_args(std::uint64_t n, int m) {
  if (n == 0) throw std::invalid_argument("N must be positive");
  if (m < 1) throw std::invalid_argument("m must be positive");
}

// Local factor Z^m_{p^e} as the chain sum sum_{0<=j_1<=...<=j_m<=e} x^{j_1+...+j_m},
// built as F_r(c) = sum_{j=0}^{c} x^j F_{r-1}(j) with F_0 = 1.
inline std::complex<double> local_chain_sum(std::complex<double> x, int e, int m) {
  std::vector<std::complex<double>> f(e + 1, 1.0), next(e + 1);
  for (int r = 1; r <= m; ++r) {
    std::complex<double> xp = 1.0, acc = 0.0;
    for (int c = 0; c <= e; ++c) {
      acc += xp * f[c];
      next[c] = acc;
      xp *= x;
    }
    f.swap(next);
  }
  return f[e];
}

}  // namespace detail

/// Z^m_N(s) summed directly over all divisor chains.
inline std::complex<double> eval_brute(std::uint64_t n, int m, ZetaPoint s) {
  detail::check_args(n, m);
  std::complex<double> acc = 0.0;
  for (const auto& chain : divisor_chains(n, m)) {
    double log_prod = 0.0;
    for (std::uint64_t v : chain) log_prod += std::log(static_cast<double>(v));
    acc += detail::npow(log_prod, s);
  }
  return acc;
}

/// Z^m_N(s) for an integer s, exactly. Every term is put over the common
/// denominator N^{ms} when s > 0.
inline Rational eval_brute_exact(std::uint64_t n, int m, long s) {
  detail::check_args(n, m);
  Integer acc = 0;
  const Integer big_n = to_integer(n);
  const Integer n_to_m = ipow(big_n, m);
  for (const auto& chain : divisor_chains(n, m)) {
    Integer prod = 1;
    for (std::uint64_t v : chain) prod *= to_integer(v);
    if (s >= 0)
      acc += ipow(Integer(n_to_m / prod), static_cast<unsigned long>(s));
    else
      acc += ipow(prod, static_cast<unsigned long>(-s));
  }
  Rational r = s >= 0 ? Rational(acc, ipow(n_to_m, static_cast<unsigned long>(s))) : Rational(acc);
  r.canonicalize();
  return r;
}

/// Z^m_N(-n) for a positive integer n; always an integer.
inline Integer special_value(std::uint64_t n_modulus, int m, long n) {
  if (n < 1) throw std::invalid_argument("special_value: n must be positive");
  Rational r = eval_brute_exact(n_modulus, m, -n);
  if (!is_integer(r)) throw std::logic_error("special value is not an integer");
  return r.get_num();
}

/// Tolerance under which both sides of an Euler factor count as vanishing.
inline constexpr double kDegenerateFactorTol = 1e-12;

/// Z^m_N(s) as prod_p prod_{k=1}^m (1 - p^{-s(ord_p N + k)}) / (1 - p^{-sk}).
/// At s = 0 the value is prod_p binom(ord_p N + m, m). A factor whose
/// numerator and denominator both vanish takes its limit (ord_p N + k)/k;
/// when a denominator vanishes alone the prime's whole local factor is
/// taken from its chain-sum form instead.
inline std::complex<double> eval_euler(const Factorization& f, int m, ZetaPoint s) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (s == ZetaPoint(0.0, 0.0)) {
    std::uint64_t v = 1;
    for (const auto& [p, e] : f) v = checked::mul(v, binomial(e + m, m));
    return static_cast<double>(v);
  }
  std::complex<double> acc = 1.0;
  for (const auto& [p, e] : f) {
    const double lp = std::log(static_cast<double>(p));
    const std::complex<double> x = detail::npow(lp, s);
    std::complex<double> local = 1.0;
    bool lone_pole = false;
    for (int k = 1; k <= m && !lone_pole; ++k) {
      const std::complex<double> num = 1.0 - detail::npow(lp * (e + k), s);
      const std::complex<double> den = 1.0 - detail::npow(lp * k, s);
      if (std::abs(den) < kDegenerateFactorTol) {
        if (std::abs(num) < kDegenerateFactorTol)
          local *= static_cast<double>(e + k) / k;
        else
          lone_pole = true;
      } else {
        local *= num / den;
      }
    }
    acc *= lone_pole ? detail::local_chain_sum(x, e, m) : local;
  }
  return acc;
}

inline std::complex<double> eval_euler(std::uint64_t n, int m, ZetaPoint s) {
  detail::check_args(n, m);
  return eval_euler(factorize(n), m, s);
}

/// Z^gamma_N(t) through its Euler product prod_p G^gamma_{ord_p N}(p^{-t_1}, ..., p^{-t_m}).
inline std::complex<double> eval_multivar(const Signature& gamma, std::uint64_t n,
                                          std::span<const ZetaPoint> t) {
  if (static_cast<int>(t.size()) != gamma.size())
    throw std::invalid_argument("eval_multivar: one variable per signature entry");
  detail::check_args(n, 1);
  std::map<int, MultiQPoly> local_poly;
  std::complex<double> acc = 1.0;
  for (const auto& [p, e] : factorize(n)) {
    auto it = local_poly.find(e);
    if (it == local_poly.end()) it = local_poly.emplace(e, gfun_finite(gamma, e)).first;
    std::vector<std::complex<double>> point;
    const double lp = std::log(static_cast<double>(p));
    for (const auto& tj : t) point.push_back(detail::npow(lp, tj));
    acc *= it->second.evaluate<std::complex<double>>(point);
  }
  return acc;
}

/// Z^gamma_N(t) summed directly over n_m^{gamma_m} | ... | n_1^{gamma_1} | N.
inline std::complex<double> eval_multivar_brute(const Signature& gamma, std::uint64_t n,
                                                std::span<const ZetaPoint> t) {
  if (static_cast<int>(t.size()) != gamma.size())
    throw std::invalid_argument("eval_multivar_brute: one variable per signature entry");
  detail::check_args(n, 1);
  const std::vector<std::uint64_t> ds = divisors(n);
  const int m = gamma.size();
  std::complex<double> acc = 0.0;
  // `bound` is n_{j-1}^{gamma_{j-1}} (N for j = 0); `term` the partial product.
  auto rec = [&](auto&& self, int j, std::uint64_t bound, std::complex<double> term) -> void {
    if (j == m) {
      acc += term;
      return;
    }
    for (std::uint64_t d : ds) {
      const std::uint64_t power = pow_bounded(d, gamma[j], bound);
      if (power == 0) break;  // divisors ascend, so every later power is larger too
      if (bound % power) continue;
      self(self, j + 1, power,
           term * detail::npow(gamma[j] * std::log(static_cast<double>(d)), t[j]));
    }
  };
  rec(rec, 0, n, 1.0);
  return acc;
}

/// A zero candidate s = 2 pi i n / ((ord_p N + k) log p).
struct ZeroLocation {
  std::uint64_t p = 0;
  int k = 0;
  long n = 0;
  ZetaPoint s;
  /// #{(l, j) : 1 <= l <= m, j != 0, (ord_p N + k) j = (ord_p N + l) n}.
  int multiplicity = 0;
  /// Actual vanishing order of Z^m_N at s: vanishing numerator factors minus
  /// vanishing denominator factors of the Euler product.
  int order = 0;
};

namespace detail {

inline int ord_or_throw(std::uint64_t n, std::uint64_t p) {
  const int e = factorize(n).ord(p);
  if (e == 0) throw std::invalid_argument("p must divide N");
  return e;
}

inline void check_zero_args(int m, int k, long n) {
  if (k < 1 || k > m) throw std::invalid_argument("k must lie in 1..m");
  if (n == 0) throw std::invalid_argument("n must be nonzero");
}

inline int multiplicity_count(int e, int m, int k, long n) {
  int count = 0;
  for (int l = 1; l <= m; ++l)
    if (((e + l) * n) % (e + k) == 0) ++count;  // j = (e+l) n / (e+k) is nonzero
  return count;
}

inline int net_order(int e, int m, int k, long n) {
  // x = p^{-s} is a primitive d-th root of unity with d the reduced denominator of n/(e+k).
  const long d = (e + k) / std::gcd(std::labs(n), long(e + k));
  int order = 0;
  for (int l = 1; l <= m; ++l) {
    if ((e + l) % d == 0) ++order;
    if (l % d == 0) --order;
  }
  return order;
}

}  // namespace detail

/// Number of pairs (l, j) with 1 <= l <= m, j != 0 and (ord_p N + k) j = (ord_p N + l) n.
inline int zero_multiplicity(std::uint64_t n_modulus, int m, std::uint64_t p, int k, long n) {
  detail::check_zero_args(m, k, n);
  return detail::multiplicity_count(detail::ord_or_throw(n_modulus, p), m, k, n);
}

/// Vanishing order of Z^m_N at s = 2 pi i n / ((ord_p N + k) log p).
inline int zero_order(std::uint64_t n_modulus, int m, std::uint64_t p, int k, long n) {
  detail::check_zero_args(m, k, n);
  return detail::net_order(detail::ord_or_throw(n_modulus, p), m, k, n);
}

/// Every candidate 2 pi i n / ((ord_p N + k) log p) with |Im s| <= height,
/// one entry per distinct point, sorted by (Im s, p).
inline std::vector<ZeroLocation> predicted_zeros(std::uint64_t n_modulus, int m, double height) {
  detail::check_args(n_modulus, m);
  if (!(height > 0)) throw std::invalid_argument("height must be positive");
  std::vector<ZeroLocation> out;
  std::map<std::tuple<std::uint64_t, long, long>, std::size_t> seen;
  for (const auto& [p, e] : factorize(n_modulus)) {
    const double lp = std::log(static_cast<double>(p));
    for (int k = 1; k <= m; ++k) {
      const double step = 2.0 * std::numbers::pi / ((e + k) * lp);
      const long nmax = static_cast<long>(std::floor(height / step + 1e-9));
      for (long n = -nmax; n <= nmax; ++n) {
        if (n == 0) continue;
        const double im = n * step;
        if (std::abs(im) > height) continue;
        const long g = std::gcd(std::labs(n), long(e + k));
        const auto key = std::make_tuple(std::uint64_t(p), n / g, long(e + k) / g);
        if (seen.count(key)) continue;
        seen.emplace(key, out.size());
        out.push_back({p, k, n, ZetaPoint(0.0, im), detail::multiplicity_count(e, m, k, n),
                       detail::net_order(e, m, k, n)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ZeroLocation& a, const ZeroLocation& b) {
    if (a.s.imag() != b.s.imag()) return a.s.imag() < b.s.imag();
    return a.p < b.p;
  });
  return out;
}

/// Vanishing order at s0 estimated from the mean of |Z| on circles of radius
/// r and r/2 around it: log2(M(r) / M(r/2)). Uses the direct chain sum.
inline double estimate_zero_order(std::uint64_t n, int m, ZetaPoint s0, double radius = 1e-3,
                                  int samples = 64) {
  auto mean_abs = [&](double r) {
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double th = 2.0 * std::numbers::pi * (i + 0.5) / samples;
      acc += std::abs(eval_brute(n, m, s0 + std::polar(r, th)));
    }
    return acc / samples;
  };
  return std::log2(mean_abs(radius) / mean_abs(radius / 2));
}

struct ScanResult {
  double min_abs = INFINITY;
  ZetaPoint argmin;
  std::size_t points = 0;
};

/// Minimum of |Z^m_N| over the grid sigma + i t with
/// sigma_min <= |sigma| <= sigma_max and |t| <= t_max, both on a common step.
inline ScanResult off_axis_scan(std::uint64_t n, int m, double sigma_min, double sigma_max,
                                double t_max, double step) {
  detail::check_args(n, m);
  const Factorization f = factorize(n);
  const long smin = std::lround(sigma_min / step), smax = std::lround(sigma_max / step);
  const long tn = std::lround(t_max / step);
  ScanResult res;
  for (long si = smin; si <= smax; ++si) {
    for (int sign : {-1, 1}) {
      const double sigma = sign * si * step;
      for (long ti = -tn; ti <= tn; ++ti) {
        const ZetaPoint s(sigma, ti * step);
        const double v = std::abs(eval_euler(f, m, s));
        ++res.points;
        if (v < res.min_abs) {
          res.min_abs = v;
          res.argmin = s;
        }
      }
    }
  }
  return res;
}

}  // namespace finzeta
