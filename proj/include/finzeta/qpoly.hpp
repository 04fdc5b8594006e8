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

// Exact q-series and multivariate q-polynomials over the integers, the
// Gaussian binomial coefficients, and the partition generating functions
// G^gamma_l(q_1, ..., q_m) together with their known closed forms.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "finzeta/exact.hpp"

namespace finzeta {

/// Truncated power series sum_{i=0}^{D} c_i q^i with exact integer
/// coefficients. Binary operations truncate to the smaller order.
class QSeries {
 public:
  QSeries() : coeffs_(1, 0) {}
  explicit QSeries(int trunc) : coeffs_(check_trunc(trunc) + 1, 0) {}
  QSeries(std::vector<std::int64_t> coeffs, int trunc) : coeffs_(check_trunc(trunc) + 1, 0) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
  }

  static QSeries one(int trunc) { return monomial(0, 1, trunc); }

  static QSeries monomial(int exp, std::int64_t coeff, int trunc) {
    QSeries s(trunc);
    if (exp <= trunc) s.coeffs_[exp] = coeff;
    return s;
  }

  /// 1 / (1 - q^step).
  static QSeries geometric(int step, int trunc) {
    if (step < 1) throw std::invalid_argument("geometric series needs a positive step");
    QSeries s(trunc);
    for (int i = 0; i <= trunc; i += step) s.coeffs_[i] = 1;
    return s;
  }

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int i) const {
    return i >= 0 && i <= trunc() ? coeffs_[i] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  QSeries truncated(int trunc) const {
    return QSeries(coeffs_, std::min(trunc, this->trunc()));
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc(), b.trunc()));
    for (int i = 0; i <= r.trunc(); ++i) r.coeffs_[i] = checked::add(a.coeffs_[i], b.coeffs_[i]);
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc(), b.trunc()));
    for (int i = 0; i <= r.trunc(); ++i) r.coeffs_[i] = checked::sub(a.coeffs_[i], b.coeffs_[i]);
    return r;
  }

  QSeries operator-() const {
    QSeries r(trunc());
    for (int i = 0; i <= trunc(); ++i) r.coeffs_[i] = checked::sub(0, coeffs_[i]);
    return r;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc(), b.trunc()));
    const int d = r.trunc();
    for (int i = 0; i <= d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= d; ++j) {
        if (b.coeffs_[j] == 0) continue;
        r.coeffs_[i + j] = checked::add(r.coeffs_[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return r;
  }

  /// Multiplicative inverse; the constant term must be +1 or -1.
  QSeries inverse() const {
    const std::int64_t c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("series is not invertible over the integers");
    QSeries r(trunc());
    r.coeffs_[0] = c0;
    for (int n = 1; n <= trunc(); ++n) {
      std::int64_t acc = 0;
      for (int i = 1; i <= n; ++i)
        acc = checked::add(acc, checked::mul(coeffs_[i], r.coeffs_[n - i]));
      r.coeffs_[n] = checked::mul(-acc, c0);
    }
    return r;
  }

  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= trunc(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << (coeffs_[i] < 0 ? " - " : " + ");
      else if (coeffs_[i] < 0) os << "-";
      const std::int64_t a = coeffs_[i] < 0 ? -coeffs_[i] : coeffs_[i];
      if (a != 1 || i == 0) os << a;
      if (i > 0) os << (a != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << trunc() + 1 << ")";
    return os.str();
  }

 private:
  static int check_trunc(int trunc) {
    if (trunc < 0) throw std::invalid_argument("series truncation order must be non-negative");
    return trunc;
  }

  std::vector<std::int64_t> coeffs_;
};

/// Exponent vector of up to 8 variables, each exponent at most 255,
/// packed one byte per variable.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::span<const int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
    for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
  }

  int exponent(int var) const { return static_cast<int>((key_ >> (8 * var)) & 0xff); }

  void set(int var, int exp) {
    if (exp < 0 || exp > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
    key_ = (key_ & ~(std::uint64_t{0xff} << (8 * var))) | (std::uint64_t(exp) << (8 * var));
  }

  int total_degree() const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exponent(i);
    return d;
  }

  friend Monomial operator*(Monomial a, Monomial b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      const int e = a.exponent(i) + b.exponent(i);
      if (e) r.set(i, e);
    }
    return r;
  }

  std::uint64_t key() const { return key_; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint64_t key_ = 0;
};

/// Polynomial in q_1..q_m with integer coefficients; zero coefficients are
/// never stored and the variable count is fixed per value.
class MultiQPoly {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  explicit MultiQPoly(int nvars = 1) : nvars_(nvars) {
    if (nvars < 1 || nvars > Monomial::kMaxVars)
      throw std::invalid_argument("MultiQPoly supports 1 to 8 variables");
  }

  static MultiQPoly constant(int nvars, std::int64_t c) {
    MultiQPoly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }

  /// q_{var+1} (variables are zero-based here).
  static MultiQPoly variable(int nvars, int var) {
    MultiQPoly p(nvars);
    Monomial mono;
    mono.set(var, 1);
    p.add_term(mono, 1);
    return p;
  }

  static MultiQPoly monomial(int nvars, std::span<const int> exps, std::int64_t coeff = 1) {
    if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent arity mismatch");
    MultiQPoly p(nvars);
    p.add_term(Monomial(exps), coeff);
    return p;
  }

  /// Univariate polynomial from coefficients, constant term first.
  static MultiQPoly univariate(std::span<const std::int64_t> coeffs) {
    MultiQPoly p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Monomial mono;
      mono.set(0, static_cast<int>(i));
      p.add_term(mono, coeffs[i]);
    }
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coeff(Monomial mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t coeff(std::span<const int> exps) const { return coeff(Monomial(exps)); }

  void add_term(Monomial mono, std::int64_t c) {
    if (c == 0) return;
    for (int i = nvars_; i < Monomial::kMaxVars; ++i)
      if (mono.exponent(i)) throw std::invalid_argument("monomial uses a variable out of range");
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.total_degree());
    return d;
  }

  /// Drops every term of total degree above `degree`.
  MultiQPoly truncated(int degree) const {
    MultiQPoly r(nvars_);
    for (const auto& [mono, c] : terms_)
      if (mono.total_degree() <= degree) r.terms_.emplace(mono, c);
    return r;
  }

  /// Drops every term with some exponent above `max_exponent`.
  MultiQPoly truncated_per_variable(int max_exponent) const {
    MultiQPoly r(nvars_);
    for (const auto& [mono, c] : terms_) {
      bool keep = true;
      for (int i = 0; i < nvars_; ++i) keep = keep && mono.exponent(i) <= max_exponent;
      if (keep) r.terms_.emplace(mono, c);
    }
    return r;
  }

  MultiQPoly& operator+=(const MultiQPoly& o) {
    check_arity(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }

  MultiQPoly& operator-=(const MultiQPoly& o) {
    check_arity(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, checked::sub(0, c));
    return *this;
  }

  friend MultiQPoly operator+(MultiQPoly a, const MultiQPoly& b) { return a += b; }
  friend MultiQPoly operator-(MultiQPoly a, const MultiQPoly& b) { return a -= b; }

  friend MultiQPoly operator*(const MultiQPoly& a, const MultiQPoly& b) {
    return multiply(a, b, -1);
  }

  friend MultiQPoly operator*(std::int64_t s, const MultiQPoly& a) {
    MultiQPoly r(a.nvars_);
    for (const auto& [mono, c] : a.terms_) r.add_term(mono, checked::mul(s, c));
    return r;
  }

  /// a*b keeping only total degree <= max_degree (no limit when negative).
  static MultiQPoly multiply(const MultiQPoly& a, const MultiQPoly& b, int max_degree) {
    a.check_arity(b);
    MultiQPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      const int da = ma.total_degree();
      if (max_degree >= 0 && da > max_degree) continue;
      for (const auto& [mb, cb] : b.terms_) {
        if (max_degree >= 0 && da + mb.total_degree() > max_degree) continue;
        r.add_term(ma * mb, checked::mul(ca, cb));
      }
    }
    return r;
  }

  MultiQPoly pow(int n) const {
    MultiQPoly r = constant(nvars_, 1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// q_i -> q_i^d for every variable.
  MultiQPoly substitute_powers(int d) const {
    MultiQPoly r(nvars_);
    for (const auto& [mono, c] : terms_) {
      Monomial m2;
      for (int i = 0; i < nvars_; ++i) m2.set(i, mono.exponent(i) * d);
      r.add_term(m2, c);
    }
    return r;
  }

  /// Re-homes this polynomial into `nvars` variables, variable i -> i + offset.
  MultiQPoly embedded(int nvars, int offset) const {
    if (nvars_ + offset > nvars) throw std::invalid_argument("embedding does not fit");
    MultiQPoly r(nvars);
    for (const auto& [mono, c] : terms_) {
      Monomial m2;
      for (int i = 0; i < nvars_; ++i) m2.set(i + offset, mono.exponent(i));
      r.terms_.emplace(m2, c);
    }
    return r;
  }

  /// q_i -> q^{weights[i]}, as a series truncated at order `trunc`.
  QSeries specialize(std::span<const int> weights, int trunc) const {
    if (static_cast<int>(weights.size()) != nvars_) throw std::invalid_argument("weight arity mismatch");
    std::vector<std::int64_t> out(trunc + 1, 0);
    for (const auto& [mono, c] : terms_) {
      long deg = 0;
      for (int i = 0; i < nvars_; ++i) deg += long(weights[i]) * mono.exponent(i);
      if (deg <= trunc) out[deg] = checked::add(out[deg], c);
    }
    return QSeries(std::move(out), trunc);
  }

  /// Univariate coefficient vector, constant term first.
  std::vector<std::int64_t> univariate_coeffs() const {
    if (nvars_ != 1) throw std::logic_error("univariate_coeffs on a multivariate polynomial");
    std::vector<std::int64_t> out(std::max(total_degree() + 1, 1), 0);
    for (const auto& [mono, c] : terms_) out[mono.exponent(0)] = c;
    return out;
  }

  template <class T>
  T evaluate(std::span<const T> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity mismatch");
    std::array<int, Monomial::kMaxVars> maxe{};
    for (const auto& [mono, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], mono.exponent(i));
    std::vector<std::vector<T>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      powers[i].assign(maxe[i] + 1, T(1));
      for (int e = 1; e <= maxe[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
    }
    T acc(0);
    for (const auto& [mono, c] : terms_) {
      T term(static_cast<double>(c));
      for (int i = 0; i < nvars_; ++i) term *= powers[i][mono.exponent(i)];
      acc += term;
    }
    return acc;
  }

  /// Value at q_1 = ... = q_m = 1, i.e. the sum of coefficients.
  Integer value_at_one() const {
    Integer acc = 0;
    for (const auto& [mono, c] : terms_) acc += to_integer(c);
    return acc;
  }

  friend bool operator==(const MultiQPoly& a, const MultiQPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Ascending total degree, then by packed key, for readable output.
    std::vector<std::pair<Monomial, std::int64_t>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.first.total_degree() < b.first.total_degree();
    });
    for (const auto& [mono, c] : sorted) {
      const std::int64_t a = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string vars;
      for (int i = 0; i < nvars_; ++i) {
        const int e = mono.exponent(i);
        if (!e) continue;
        if (!vars.empty()) vars += "*";
        vars += nvars_ == 1 ? "q" : "q" + std::to_string(i + 1);
        if (e > 1) vars += "^" + std::to_string(e);
      }
      if (vars.empty()) os << a;
      else if (a == 1) os << vars;
      else os << a << "*" << vars;
    }
    return os.str();
  }

 private:
  void check_arity(const MultiQPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  }

  int nvars_;
  Terms terms_;
};

/// num / den where the quotient must be a polynomial. The constant term of
/// den must be +1 or -1; a nonzero remainder throws std::domain_error.
inline MultiQPoly exact_divide(const MultiQPoly& num, const MultiQPoly& den) {
  const std::int64_t c0 = den.coeff(Monomial{});
  if (c0 != 1 && c0 != -1) throw std::domain_error("divisor must have constant term +1 or -1");
  const int n = num.nvars();
  MultiQPoly q(n);
  const int bound = num.total_degree() - den.total_degree();
  if (bound >= 0) {
    // den = c0 (1 - u); iterate q = c0 * (num + c0 u q) to a fixed point.
    MultiQPoly u = MultiQPoly::constant(n, 1) - c0 * den;
    const MultiQPoly base = c0 * num.truncated(bound);
    for (int it = 0; it <= bound + 1; ++it) {
      MultiQPoly next = base + MultiQPoly::multiply(u, q, bound);
      if (next == q) break;
      q = std::move(next);
    }
  }
  if (!(q * den == num)) throw std::domain_error("polynomial division is not exact");
  return q;
}

namespace detail {

inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked::add(r[i + j], checked::mul(a[i], b[j]));
  }
  return r;
}

inline void poly_trim(std::vector<std::int64_t>& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

/// Univariate num / den by series division; throws unless the remainder is zero.
inline std::vector<std::int64_t> poly_exact_div(std::vector<std::int64_t> num,
                                                std::vector<std::int64_t> den) {
  poly_trim(num);
  poly_trim(den);
  if (den.size() == 1 && den[0] == 0) throw std::domain_error("division by the zero polynomial");
  if (num.size() < den.size()) {
    if (num.size() == 1 && num[0] == 0) return {0};
    throw std::domain_error("polynomial division is not exact");
  }
  const int qdeg = static_cast<int>(num.size() - den.size());
  QSeries q = QSeries(num, qdeg) / QSeries(den, qdeg);
  std::vector<std::int64_t> quotient = q.coeffs();
  std::vector<std::int64_t> back = poly_mul(quotient, den);
  poly_trim(back);
  if (back != num) throw std::domain_error("polynomial division is not exact");
  return quotient;
}

}  // namespace detail

/// Gaussian binomial [n choose k]_q = prod_{j=1}^k (1 - q^{n+1-j}) / (1 - q^j);
/// the zero polynomial when k > n.
inline MultiQPoly qbinom(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("qbinom needs non-negative arguments");
  if (k > n) return MultiQPoly(1);
  auto one_minus = [](int e) {
    std::vector<std::int64_t> c(e + 1, 0);
    c[0] = 1;
    c[e] -= 1;
    return c;
  };
  std::vector<std::int64_t> num{1}, den{1};
  for (int j = 1; j <= k; ++j) {
    num = detail::poly_mul(num, one_minus(n + 1 - j));
    den = detail::poly_mul(den, one_minus(j));
  }
  return MultiQPoly::univariate(detail::poly_exact_div(std::move(num), std::move(den)));
}

/// Divisibility exponents gamma = (gamma_1, ..., gamma_m), all positive.
class Signature {
 public:
  Signature(std::initializer_list<int> parts) : Signature(std::vector<int>(parts)) {}
  explicit Signature(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("signature must be non-empty");
    if (static_cast<int>(parts_.size()) > Monomial::kMaxVars)
      throw std::invalid_argument("signature longer than 8 is not supported");
    for (int g : parts_)
      if (g < 1) throw std::invalid_argument("signature entries must be positive");
  }

  /// (1, ..., 1) of length m.
  static Signature ones(int m) { return Signature(std::vector<int>(m, 1)); }

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  Signature tail() const { return Signature(std::vector<int>(parts_.begin() + 1, parts_.end())); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> parts_;
};

/// Visits l >= lambda_1 >= ... >= lambda_m >= 0 with gamma_j | lambda_j,
/// lexicographically in (lambda_1, ..., lambda_m).
inline void for_each_partition(const Signature& gamma, int l,
                               const std::function<void(std::span<const int>)>& visit) {
  const int m = gamma.size();
  std::vector<int> lambda(m, 0);
  std::function<void(int, int)> rec = [&](int j, int cap) {
    if (j == m) {
      visit(lambda);
      return;
    }
    for (int v = 0; v <= cap; v += gamma[j]) {
      lambda[j] = v;
      rec(j + 1, v);
    }
  };
  rec(0, l);
}

/// G^gamma_l = sum of q_1^{lambda_1} ... q_m^{lambda_m} over the partitions
/// visited by for_each_partition.
inline MultiQPoly gfun_finite(const Signature& gamma, int l) {
  if (l < 0) throw std::invalid_argument("gfun_finite: l must be non-negative");
  MultiQPoly g(gamma.size());
  for_each_partition(gamma, l, [&](std::span<const int> lambda) { g.add_term(Monomial(lambda), 1); });
  return g;
}

/// h_j(x_1, ..., x_r): sum of all degree-j monomials in the arguments.
inline MultiQPoly complete_symmetric(int j, std::span<const MultiQPoly> args) {
  if (args.empty()) throw std::invalid_argument("complete_symmetric needs arguments");
  if (j < 0) return MultiQPoly(args.front().nvars());
  const int n = args.front().nvars();
  // h[i] holds h_i over the arguments processed so far.
  std::vector<MultiQPoly> h(j + 1, MultiQPoly(n));
  h[0] = MultiQPoly::constant(n, 1);
  for (const auto& x : args)
    for (int i = 1; i <= j; ++i) h[i] += x * h[i - 1];
  return h[j];
}

/// q_1, q_1 q_2, ..., q_1 q_2 ... q_m.
inline std::vector<MultiQPoly> staircase_monomials(int m) {
  std::vector<MultiQPoly> out;
  std::vector<int> exps(m, 0);
  for (int k = 0; k < m; ++k) {
    exps[k] = 1;
    out.push_back(MultiQPoly::monomial(m, exps));
  }
  return out;
}

namespace detail {

inline MultiQPoly gfun_rec(const std::vector<int>& gamma, std::size_t first, int nvars, int l,
                           std::map<std::pair<std::size_t, int>, MultiQPoly>& memo) {
  if (auto it = memo.find({first, l}); it != memo.end()) return it->second;
  const int g = gamma[first];
  MultiQPoly out(nvars);
  for (int n = 0; n <= l / g; ++n) {
    Monomial lead;
    lead.set(static_cast<int>(first), g * n);
    if (first + 1 == gamma.size()) {
      out.add_term(lead, 1);
      continue;
    }
    MultiQPoly lead_poly(nvars);
    lead_poly.add_term(lead, 1);
    out += lead_poly * gfun_rec(gamma, first + 1, nvars, g * n, memo);
  }
  memo.emplace(std::make_pair(first, l), out);
  return out;
}

}  // namespace detail

/// G^gamma_l via the first-part recurrence
/// G^gamma_l = sum_{n=0}^{floor(l/gamma_1)} q_1^{gamma_1 n} G^{(gamma_2..)}_{gamma_1 n}(q_2, ...).
inline MultiQPoly gfun_recurrence(const Signature& gamma, int l) {
  if (l < 0) throw std::invalid_argument("gfun_recurrence: l must be non-negative");
  std::map<std::pair<std::size_t, int>, MultiQPoly> memo;
  return detail::gfun_rec(gamma.parts(), 0, gamma.size(), l, memo);
}

/// gamma = d * (c_1, ..., c_m) with d = gcd(gamma).
inline std::pair<int, Signature> gcd_reduce(const Signature& gamma) {
  int d = 0;
  for (int g : gamma.parts()) d = std::gcd(d, g);
  std::vector<int> c;
  for (int g : gamma.parts()) c.push_back(g / d);
  return {d, Signature(std::move(c))};
}

/// G^gamma_l through the gcd reduction G^{(c)}_{floor(l/d)}(q_1^d, ..., q_m^d).
inline MultiQPoly gfun_via_gcd(const Signature& gamma, int l) {
  auto [d, c] = gcd_reduce(gamma);
  return gfun_finite(c, l / d).substitute_powers(d);
}

enum class ClosedFormKind {
  kC1,        // gamma = (c, 1)
  kCC1,       // gamma = (c, c, 1), all q_i = q
  kCDC1,      // gamma = (cd, c, 1), all q_i = q
  kStepPowerful,  // gamma = (k, ..., k, 1) with l copies of k, all q_i = q
};

struct ClosedFormParams {
  ClosedFormKind kind = ClosedFormKind::kC1;
  int c = 1;
  int d = 1;
  int k = 1;
  int l = 1;
  // (c, 1) only: specialize q_1 = q^w1, q_2 = q^w2.
  int w1 = 1;
  int w2 = 1;

  Signature signature() const {
    switch (kind) {
      case ClosedFormKind::kC1: return Signature{c, 1};
      case ClosedFormKind::kCC1: return Signature{c, c, 1};
      case ClosedFormKind::kCDC1: return Signature{c * d, c, 1};
      case ClosedFormKind::kStepPowerful: {
        std::vector<int> g(l, k);
        g.push_back(1);
        return Signature(std::move(g));
      }
    }
    throw std::logic_error("unknown closed form kind");
  }

  /// Specialization weights matching the closed form's variables.
  std::vector<int> weights() const {
    if (kind == ClosedFormKind::kC1) return {w1, w2};
    return std::vector<int>(signature().size(), 1);
  }
};

/// The closed-form family matching gamma, if any; (c, 1) is reported with
/// unit weights.
inline std::optional<ClosedFormParams> detect_closed_form(const Signature& gamma) {
  const auto& g = gamma.parts();
  const int m = gamma.size();
  if (m < 2 || g.back() != 1) return std::nullopt;
  ClosedFormParams p;
  if (m == 2) {
    p.kind = ClosedFormKind::kC1;
    p.c = g[0];
    return p;
  }
  if (m == 3 && g[0] == g[1]) {
    p.kind = ClosedFormKind::kCC1;
    p.c = g[0];
    return p;
  }
  if (m == 3 && g[0] % g[1] == 0) {
    p.kind = ClosedFormKind::kCDC1;
    p.c = g[1];
    p.d = g[0] / g[1];
    return p;
  }
  if (std::all_of(g.begin(), g.end() - 1, [&](int v) { return v == g[0]; })) {
    p.kind = ClosedFormKind::kStepPowerful;
    p.k = g[0];
    p.l = m - 1;
    return p;
  }
  return std::nullopt;
}

/// G^gamma_infinity(q, ..., q) to order `trunc` by enumerating the partitions
/// of size at most `trunc`.
inline QSeries gfun_infinite_series(const Signature& gamma, int trunc) {
  if (trunc < 0) throw std::invalid_argument("gfun_infinite_series: truncation must be >= 0");
  std::vector<std::int64_t> c(trunc + 1, 0);
  const int m = gamma.size();
  std::function<void(int, int, int)> rec = [&](int j, int cap, int size) {
    if (j == m) {
      ++c[size];
      return;
    }
    for (int v = 0; v <= cap && size + v <= trunc; v += gamma[j]) rec(j + 1, v, size + v);
  };
  rec(0, trunc, 0);
  return QSeries(std::move(c), trunc);
}

namespace detail {

inline QSeries sparse(std::initializer_list<std::pair<int, std::int64_t>> terms, int trunc) {
  QSeries s(trunc);
  for (auto [e, c] : terms) s = s + QSeries::monomial(e, c, trunc);
  return s;
}

}  // namespace detail

/// Expands the rational closed form of G^gamma_infinity for the supported
/// signature families as a series to order `trunc`.
inline QSeries gfun_infinite_closed(const ClosedFormParams& p, int trunc) {
  if (trunc < 1) throw std::invalid_argument("gfun_infinite_closed: truncation must be >= 1");
  if (p.c < 1 || p.d < 1 || p.k < 1 || p.l < 1 || p.w1 < 1 || p.w2 < 1)
    throw std::invalid_argument("gfun_infinite_closed: parameters must be positive");
  const int D = trunc;
  using detail::sparse;
  switch (p.kind) {
    case ClosedFormKind::kC1: {
      // (1 - q2 + q1^c q2 - q1^c q2^c) / ((1 - q2)(1 - q1^c)(1 - q1^c q2^c))
      const int a = p.w1, b = p.w2, c = p.c;
      QSeries num = sparse({{0, 1}, {b, -1}, {c * a + b, 1}, {c * (a + b), -1}}, D);
      return num * QSeries::geometric(b, D) * QSeries::geometric(c * a, D) *
             QSeries::geometric(c * (a + b), D);
    }
    case ClosedFormKind::kCC1: {
      const int c = p.c;
      QSeries num = sparse({{0, 1}, {1, -1}, {c, 1}, {c + 1, -1}, {2 * c, 1}}, D);
      return num * QSeries::geometric(1, D) * QSeries::geometric(2 * c, D) *
             QSeries::geometric(3 * c, D);
    }
    case ClosedFormKind::kCDC1: {
      const int c = p.c, cd = p.c * p.d;
      QSeries t1 = sparse({{0, 1}, {1, -1}, {c, 1}}, D) * QSeries::geometric(cd, D);
      QSeries t2 = sparse({{c, 1}, {2 * c, 1}}, D) * QSeries::geometric(2 * cd, D);
      QSeries t3 = QSeries::monomial(2 * c + 1, 1, D) * QSeries::geometric(3 * cd, D);
      return (t1 - t2 + t3) * QSeries::geometric(1, D) * QSeries::geometric(2 * c, D);
    }
    case ClosedFormKind::kStepPowerful: {
      const int k = p.k, l = p.l;
      QSeries num = sparse({{0, 1}, {1, -1}, {l * k + 1, 1}, {k * (l + 1), -1}}, D);
      QSeries s = num / sparse({{0, 1}, {1, -1}}, D);
      for (int j = 1; j <= l + 1; ++j) s = s * QSeries::geometric(j * k, D);
      return s;
    }
  }
  throw std::logic_error("unknown closed form kind");
}

/// The (c, c, 1) closed form before cancelling (1 - q^{2c}):
/// (1-q+q^c-q^{c+1}+q^{2c+1}-q^{3c}+q^{3c+1}-q^{4c}) / ((1-q)(1-q^{2c})^2(1-q^{3c})).
inline QSeries gfun_cc1_unreduced(int c, int trunc) {
  const int D = trunc;
  QSeries num = detail::sparse({{0, 1}, {1, -1}, {c, 1}, {c + 1, -1}, {2 * c + 1, 1},
                                {3 * c, -1}, {3 * c + 1, 1}, {4 * c, -1}},
                               D);
  return num * QSeries::geometric(1, D) * QSeries::geometric(2 * c, D) *
         QSeries::geometric(2 * c, D) * QSeries::geometric(3 * c, D);
}

namespace detail {

inline MultiQPoly bivar(std::initializer_list<std::tuple<int, int, std::int64_t>> terms) {
  MultiQPoly p(2);
  for (auto [e1, e2, c] : terms) {
    Monomial m;
    m.set(0, e1);
    m.set(1, e2);
    p.add_term(m, c);
  }
  return p;
}

}  // namespace detail

/// Bivariate G^{(c,1)}_infinity(q_1, q_2) truncated at total degree `degree`.
inline MultiQPoly gfun_c1_bivariate(int c, int degree) {
  using detail::bivar;
  MultiQPoly num = bivar({{0, 0, 1}, {0, 1, -1}, {c, 1, 1}, {c, c, -1}});
  auto geometric = [&](int e1, int e2) {
    MultiQPoly g(2);
    for (int i = 0; i * (e1 + e2) <= degree; ++i) {
      Monomial m;
      m.set(0, e1 * i);
      m.set(1, e2 * i);
      g.add_term(m, 1);
    }
    return g;
  };
  MultiQPoly r = MultiQPoly::multiply(num, geometric(0, 1), degree);
  r = MultiQPoly::multiply(r, geometric(c, 0), degree);
  return MultiQPoly::multiply(r, geometric(c, c), degree);
}

/// Finite G^{(c,1)}_l(q_1, q_2) from its closed form with d = floor(l / c):
/// [(1-q1^{c(d+1)})(1-(q1q2)^c) - q2(1-q1^c)(1-(q1q2)^{c(d+1)})]
///   / [(1-q2)(1-q1^c)(1-(q1q2)^c)], divided exactly.
inline MultiQPoly gfun_c1_finite_closed(int c, int l) {
  using detail::bivar;
  const int d = l / c;
  const int top = c * (d + 1);
  MultiQPoly num = bivar({{0, 0, 1}, {top, 0, -1}}) * bivar({{0, 0, 1}, {c, c, -1}}) -
                   bivar({{0, 1, 1}}) * bivar({{0, 0, 1}, {c, 0, -1}}) *
                       bivar({{0, 0, 1}, {top, top, -1}});
  MultiQPoly den = bivar({{0, 0, 1}, {0, 1, -1}}) * bivar({{0, 0, 1}, {c, 0, -1}}) *
                   bivar({{0, 0, 1}, {c, c, -1}});
  return exact_divide(num, den);
}

}  // namespace finzeta
