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

// Unitarity of G_{k,l}(T) = 1 - T + T^{lk+1} - T^{k(l+1)} and the resulting
// continuation verdict for the step-powerful Dirichlet series F_{k,l}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "finzeta/exact.hpp"

namespace finzeta {

/// Integer polynomial, constant term first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// Sum of coeff * T^exp over the given terms.
  static IntPoly from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    std::vector<std::int64_t> c;
    for (const auto& [e, v] : terms) {
      if (e < 0) throw std::invalid_argument("IntPoly: negative exponent");
      if (static_cast<std::size_t>(e) >= c.size()) c.resize(e + 1, 0);
      c[e] = checked::add(c[e], v);
    }
    return IntPoly(std::move(c));
  }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t operator[](int i) const {
    return i >= 0 && i <= degree() ? coeffs_[i] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                  [](std::int64_t c) { return c != 0; }));
  }

  /// sum |c_i|, the scale used for residual checks.
  double coefficient_scale() const {
    double s = 0;
    for (std::int64_t c : coeffs_) s += std::fabs(static_cast<double>(c));
    return s;
  }

  template <class T>
  T evaluate(T x) const {
    T acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + T(static_cast<double>(coeffs_[i]));
    return acc;
  }

  IntPoly derivative() const {
    std::vector<std::int64_t> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(checked::mul(coeffs_[i], std::int64_t{i}));
    return IntPoly(std::move(d));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::add(a[static_cast<int>(i)], b[static_cast<int>(i)]);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::sub(a[static_cast<int>(i)], b[static_cast<int>(i)]);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = checked::add(c[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const std::string& var = "T") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      const std::int64_t c = coeffs_[i];
      if (c == 0) continue;
      const std::int64_t mag = c < 0 ? -c : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (i == 0 || mag != 1) os << mag;
      if (i > 0) {
        if (mag != 1) os << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

inline void check_kl(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("k and l must be positive");
}

/// G_{k,l}(T) = 1 - T + T^{lk+1} - T^{k(l+1)}.
inline IntPoly build_G(int k, int l) {
  check_kl(k, l);
  return IntPoly::from_terms({{0, 1}, {1, -1}, {l * k + 1, 1}, {k * (l + 1), -1}});
}

/// H_{k,l}(T) = 1 + (T^k - T) sum_{j<l} T^{kj}; throws unless (1 - T^k) H = G.
inline IntPoly factor_H(int k, int l) {
  check_kl(k, l);
  IntPoly geometric;
  for (int j = 0; j < l; ++j) geometric = geometric + IntPoly::from_terms({{k * j, 1}});
  const IntPoly h = IntPoly::from_terms({{0, 1}}) +
                    IntPoly::from_terms({{k, 1}, {1, -1}}) * geometric;
  if (IntPoly::from_terms({{0, 1}, {k, -1}}) * h != build_G(k, l))
    throw std::logic_error("factor_H: (1 - T^k) H_{k,l} differs from G_{k,l}");
  return h;
}

namespace detail {

// Fujiwara bound: every root z satisfies |z| <= 2 max_i |a_{n-i}/a_n|^{1/i},
// with the constant-term entry halved.
inline double root_bound(const IntPoly& f) {
  const int n = f.degree();
  const double lead = std::fabs(static_cast<double>(f[n]));
  double best = 0;
  for (int i = 1; i <= n; ++i) {
    double ratio = std::fabs(static_cast<double>(f[n - i])) / lead;
    if (i == n) ratio /= 2;
    best = std::max(best, std::pow(ratio, 1.0 / i));
  }
  return 2 * best;
}

inline std::complex<long double> newton_polish(const IntPoly& f, const IntPoly& df,
                                               std::complex<long double> z) {
  for (int it = 0; it < 4; ++it) {
    const auto fz = f.evaluate(z);
    const auto dz = df.evaluate(z);
    if (std::abs(dz) == 0) break;
    const auto next = z - fz / dz;
    if (std::abs(f.evaluate(next)) >= std::abs(fz)) break;
    z = next;
  }
  return z;
}

}  // namespace detail

inline constexpr int kAberthMaxIterations = 2000;

/// All complex roots of f with multiplicity, by Aberth-Ehrlich iteration
/// started on a circle of the Fujiwara radius, then Newton-polished.
inline std::vector<std::complex<double>> poly_roots(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("poly_roots: degree must be at least 1");
  const IntPoly df = f.derivative();
  if (n == 1) return {std::complex<double>(-static_cast<double>(f[0]) / static_cast<double>(f[1]), 0.0)};

  using C = std::complex<double>;
  const double radius = detail::root_bound(f);
  std::vector<C> z(n);
  for (int j = 0; j < n; ++j) z[j] = std::polar(radius, 2 * std::numbers::pi * j / n + 0.4);

  const double scale = f.coefficient_scale();
  bool converged = false;
  for (int it = 0; it < kAberthMaxIterations && !converged; ++it) {
    converged = true;
    for (int j = 0; j < n; ++j) {
      const C fz = f.evaluate(z[j]);
      const double mag = std::max(1.0, std::abs(z[j]));
      if (std::abs(fz) <= 1e-15 * scale * std::pow(mag, n)) continue;
      const C ratio = fz / df.evaluate(z[j]);
      C repulsion = 0.0;
      for (int i = 0; i < n; ++i)
        if (i != j) repulsion += 1.0 / (z[j] - z[i]);
      const C step = ratio / (1.0 - ratio * repulsion);
      z[j] -= step;
      if (std::abs(step) > 1e-14 * mag) converged = false;
    }
  }
  if (!converged) throw std::runtime_error("poly_roots: Aberth iteration did not converge");

  std::vector<C> roots(n);
  for (int j = 0; j < n; ++j) {
    const auto polished = detail::newton_polish(f, df, std::complex<long double>(z[j]));
    roots[j] = C(static_cast<double>(polished.real()), static_cast<double>(polished.imag()));
    const double mag = std::max(1.0, std::abs(roots[j]));
    if (std::abs(f.evaluate(roots[j])) > 1e-10 * scale * std::pow(mag, n))
      throw std::runtime_error("poly_roots: residual above tolerance");
  }
  std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

inline constexpr double kUnitarityTol = 1e-8;

struct RootInfo {
  std::complex<double> root;
  double modulus = 0;
  double residual = 0;
};

struct UnitarityVerdict {
  int k = 0;
  int l = 0;
  IntPoly polynomial;
  std::vector<RootInfo> roots;
  bool unitary = false;
  std::optional<RootInfo> witness;  // root farthest from the unit circle when not unitary
  std::string conclusion;
};

inline constexpr const char* kWholePlaneConclusion = "meromorphic on C";
inline constexpr const char* kNaturalBoundaryConclusion =
    "meromorphic on Re s > 0 with natural boundary Re s = 0";

/// Unitarity of G_{k,l}: every root on the unit circle within kUnitarityTol.
inline UnitarityVerdict classify(int k, int l) {
  UnitarityVerdict v;
  v.k = k;
  v.l = l;
  v.polynomial = build_G(k, l);
  double worst = -1;
  for (const auto& r : poly_roots(v.polynomial)) {
    RootInfo info{r, std::abs(r), std::abs(v.polynomial.evaluate(r))};
    const double off = std::fabs(info.modulus - 1);
    if (off > worst) {
      worst = off;
      v.witness = info;
    }
    v.roots.push_back(info);
  }
  v.unitary = worst <= kUnitarityTol;
  if (v.unitary) v.witness.reset();
  v.conclusion = v.unitary ? kWholePlaneConclusion : kNaturalBoundaryConclusion;
  return v;
}

}  // namespace finzeta
