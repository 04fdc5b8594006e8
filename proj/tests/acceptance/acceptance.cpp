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

// Acceptance suite: one PASS/FAIL line per criterion, followed by indented
// detail lines. Exit status is 0 when the set of failing criteria equals the
// documented known-failure set (see kKnownFailures), 1 otherwise; --strict
// makes any FAIL fatal.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "finzeta/finzeta.hpp"
#include "identities.hpp"

namespace fz = finzeta;
using C = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  __attribute__((format(printf, 2, 3))) void note(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    details.emplace_back(buf);
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("violated: " + what);
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

// Every on-axis zero candidate whose counted multiplicity exceeds the true
// vanishing order is a non-zero (see README, "Zeros"), so the literal zero
// criterion cannot pass.
const std::set<int> kKnownFailures = {3};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel_diff(C a, C b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0 : std::abs(a - b) / scale;
}

std::vector<C> sample_points(std::size_t count) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> re(-2, 2), im(-20, 20);
  std::vector<C> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(re(rng), im(rng));
  return out;
}

Outcome euler_product() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto points = sample_points(50);
  double worst = 0;
  std::uint64_t worst_n = 0, evals = 0;
  for (std::uint64_t n = 1; n <= 500; ++n)
    for (int m = 1; m <= 4; ++m)
      for (const C& s : points) {
        const double d = rel_diff(fz::eval_euler(n, m, s), fz::eval_brute(n, m, s));
        ++evals;
        if (d > worst) {
          worst = d;
          worst_n = n;
        }
      }
  const double secs = seconds_since(t0);
  o.note("%llu evaluations, worst relative difference %.3e (N=%llu), %.2f s", (unsigned long long)evals, worst,
         (unsigned long long)worst_n, secs);
  o.require(worst <= 1e-10, "relative difference <= 1e-10");
  o.require(secs < 60, "runtime < 60 s");
  return o;
}

Outcome functional_equation() {
  Outcome o;
  const auto points = sample_points(50);
  double worst = 0;
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    for (int m = 1; m <= 4; ++m)
      for (const C& s : points) {
        const C lhs = fz::eval_euler(n, m, -s);
        const C rhs = std::exp(double(m) * s * log_n) * fz::eval_euler(n, m, s);
        worst = std::max(worst, rel_diff(lhs, rhs));
      }
  }
  o.note("worst relative difference %.3e over N <= 500, m <= 4, 50 points", worst);
  o.require(worst <= 1e-10, "relative difference <= 1e-10");
  return o;
}

Outcome zeros() {
  Outcome o;
  std::size_t predicted = 0, vanishing = 0, simple_ok = 0, simple_total = 0;
  double worst_nonzero = INFINITY, worst_simple = 0;
  for (std::uint64_t n : {2u, 6u, 12u})
    for (int m = 1; m <= 3; ++m)
      for (const auto& z : fz::predicted_zeros(n, m, 30)) {
        ++predicted;
        const double v = std::abs(fz::eval_brute(n, m, z.s));
        if (v < 1e-9) ++vanishing;
        if (z.order == 1) {
          ++simple_total;
          if (v < 1e-9) ++simple_ok;
          worst_simple = std::max(worst_simple, v);
        } else {
          worst_nonzero = std::min(worst_nonzero, v);
        }
      }
  o.note("on-axis: %zu candidates, %zu with |Z| < 1e-9", predicted, vanishing);
  o.note("on-axis: %zu candidates of net order 1, %zu vanish (max |Z| %.2e)", simple_total, simple_ok, worst_simple);
  o.note("on-axis: %zu candidates of net order 0, min |Z| %.3f", predicted - simple_total, worst_nonzero);
  o.require(vanishing == predicted, "every counted candidate has |Z| < 1e-9");

  double off_min = INFINITY;
  std::size_t points = 0;
  for (std::uint64_t n : {2u, 6u, 12u})
    for (int m = 1; m <= 3; ++m) {
      const auto scan = fz::off_axis_scan(n, m, 0.05, 2.0, 30.0, 0.01);
      off_min = std::min(off_min, scan.min_abs);
      points += scan.points;
    }
  o.note("off-axis: %zu grid points, min |Z| %.4f", points, off_min);
  o.require(off_min >= 1e-6, "no off-axis value below 1e-6");

  const auto list = fz::predicted_zeros(2, 2, 30);
  const fz::ZeroLocation* doubled = nullptr;
  for (const auto& z : list)
    if (z.multiplicity == 2) {
      doubled = &z;
      break;
    }
  if (doubled == nullptr) {
    o.require(false, "N=2, m=2 coincidence point exists");
  } else {
    const double est = fz::estimate_zero_order(2, 2, doubled->s);
    o.note("N=2, m=2 at s = %.6fi: counted multiplicity 2, net order %d, circle estimate %.3f, |Z| = %.3f",
           doubled->s.imag(), doubled->order, est, std::abs(fz::eval_brute(2, 2, doubled->s)));
    o.require(std::fabs(est - 2) < 0.25, "circle estimate confirms order 2 at the coincidence");
  }
  o.note("analysis: the vanishing order is (#l with d | e+l) - (#l with d | l) in {0, 1}; all zeros are simple");
  return o;
}

Outcome q_binomial_identities() {
  Outcome o;
  bool finite = true, infinite = true;
  for (int m = 1; m <= 6; ++m) {
    for (int l = 0; l <= 30; ++l) finite = finite && identities::skew_binom_holds(m, l);
    infinite = infinite && identities::skew_binom_infinite_holds(m, 20);
  }
  o.note("finite form m <= 6, l <= 30: %s; infinite form to bidegree 20: %s", finite ? "equal" : "differ",
         infinite ? "equal" : "differ");
  o.require(finite && infinite, "exact polynomial equality");
  return o;
}

Outcome generating_function_identities() {
  Outcome o;
  bool symmetric = true;
  for (int m = 1; m <= 5; ++m)
    for (int l = 0; l <= 20; ++l) symmetric = symmetric && identities::complete_symmetric_holds(m, l);
  std::mt19937 rng(314159);
  bool recurrence = true, gcd = true;
  int cases = 0;
  for (int m = 1; m <= 5; ++m)
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> g(m);
      for (int& v : g) v = static_cast<int>(rng() % 4) + 1;
      const fz::Signature gamma(g);
      for (int l = 0; l <= 20; l += (m >= 4 ? 4 : 1)) {
        recurrence = recurrence && identities::recurrence_holds(gamma, l);
        gcd = gcd && identities::gcd_reduction_holds(gamma, l);
        ++cases;
      }
    }
  o.note("complete symmetric sums m <= 5, l <= 20: %s", symmetric ? "equal" : "differ");
  o.note("recurrence and gcd reduction on %d random (signature, l) cases: %s / %s", cases,
         recurrence ? "equal" : "differ", gcd ? "equal" : "differ");
  o.require(symmetric && recurrence && gcd, "exact polynomial equality");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  bool ok = true;
  for (int c = 1; c <= 4; ++c) {
    ok = ok && identities::c1_bivariate_holds(c, 40);
    fz::ClosedFormParams c1;
    c1.kind = fz::ClosedFormKind::kC1;
    c1.c = c;
    fz::ClosedFormParams cc1 = c1;
    cc1.kind = fz::ClosedFormKind::kCC1;
    ok = ok && identities::closed_form_series_holds(c1, 40) && identities::closed_form_series_holds(cc1, 40);
  }
  o.note("(c,1) bivariate and univariate, (c,c,1) univariate, c <= 4, order 40: %s", ok ? "equal" : "differ");
  o.require(ok, "closed forms equal truncated enumeration");
  return o;
}

Outcome powerful_factorization() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      const auto c = fz::powerful_zeta_factorization(k, l, 10000);
      const auto bad = c.lhs.first_mismatch(c.rhs);
      if (bad) o.note("k=%d l=%d first mismatch at n=%llu", k, l, (unsigned long long)bad);
      o.require(bad == 0, "enumeration equals convolution");
    }
  if (o.pass) o.note("k <= 3, l <= 3, n <= 10^4: all coefficients equal");
  return o;
}

Outcome square_case_closed_form() {
  Outcome o;
  for (int l = 1; l <= 3; ++l) {
    const auto c = fz::F_kl_coeffs(2, l, 100000);
    const bool eq = c.closed_form && c.sieve.first_mismatch(*c.closed_form) == 0;
    o.require(eq, "sieve equals Moebius convolution for l = " + std::to_string(l));
  }
  if (o.pass) o.note("l <= 3, n <= 10^5: sieve equals convolution coefficients");
  const std::vector<std::uint64_t> expected{1,  4,   9,   16,  25,  32,  36,  49,  64,
                                            81, 100, 121, 128, 144, 169, 196, 225, 243};
  const auto got = fz::sieve_step_powerful(243, {2, 2});
  o.note("2-step 2-powerful numbers <= 243: %zu values, %s", got.size(), got == expected ? "match" : "differ");
  o.require(got == expected, "list of 18 values matches");
  return o;
}

Outcome unitarity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst_residual = 0;
  int root_constraint_checked = 0, second_derivative_checked = 0;
  for (int k = 1; k <= 8; ++k)
    for (int l = 1; l <= 5; ++l) {
      const auto v = fz::classify(k, l);
      if (v.unitary != (k <= 2)) o.require(false, "verdict (k <= 2) at k=" + std::to_string(k) + " l=" + std::to_string(l));
      const auto g2 = v.polynomial.derivative().derivative();
      for (const auto& r : v.roots) {
        worst_residual = std::max(worst_residual, r.residual);
        if (k < 3) continue;
        if (std::fabs(r.modulus - 1) <= fz::kUnitarityTol) {
          ++root_constraint_checked;
          const double dist = std::min(std::abs(std::pow(r.root, k) - 1.0), std::abs(std::pow(r.root, k - 2) - 1.0));
          o.require(dist <= 1e-6, "unit-circle root is a k-th or (k-2)-th root of unity");
        }
        if (std::abs(std::pow(r.root, k - 2) - 1.0) <= 1e-6) {
          ++second_derivative_checked;
          o.require(std::abs(g2.evaluate(r.root)) > 1e-6, "second derivative nonzero");
        }
      }
    }
  const double secs = seconds_since(t0);
  o.note("40 polynomials, max residual %.2e, %d unit-circle roots constrained, %d second derivatives checked, %.2f s",
         worst_residual, root_constraint_checked, second_derivative_checked, secs);
  o.require(worst_residual <= 1e-9, "root residual <= 1e-9");
  o.require(secs < 10, "runtime < 10 s");
  return o;
}

Outcome averages() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    const auto r = fz::average_experiment(fz::AverageKind::kGroupCount, m, 0, 1000000);
    const double ratio = r.empirical_constant / r.predicted_constant;
    o.note("g^%d mean %.5f vs %.5f (ratio %.4f)", m, r.empirical_constant, r.predicted_constant, ratio);
    o.require(std::fabs(ratio - 1) <= 0.02, "within 2% for m = " + std::to_string(m));
  }
  const auto d = fz::average_experiment(fz::AverageKind::kZetaAtZero, 1, 0, 1000000);
  std::ostringstream curve;
  for (const auto& p : d.curve) curve << " X=" << p.x << ":" << p.ratio;
  o.note("divisor sum / (X log X):%s", curve.str().c_str());
  o.note("%s", d.note.c_str());
  o.require(std::fabs(d.empirical_constant - 1) <= 0.15, "divisor average within 15% of 1");
  return o;
}

Outcome eisenstein() {
  Outcome o;
  for (C s : {C(1, 0), C(2, 0), C(1, 1)}) {
    const auto c = fz::eisen1_check(s, 200);
    o.note("s = %g%+gi: %s, %s, max relative error %.2e", s.real(), s.imag(), c.ok ? "agree" : "disagree",
           c.exact ? "exact" : "floating", c.max_rel_error);
    o.require(c.ok, "coefficient identity");
    o.require(c.exact == (s.imag() == 0), "exact comparison at integer s");
  }
  return o;
}

Outcome two_variable_coefficients() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    for (long s = -2; s <= 2; ++s) {
      const auto c = fz::zeta_m_st_coeffs(m, s, 10000);
      const auto bad = c.lhs.first_mismatch(c.rhs);
      if (bad) o.note("m=%d s=%ld first mismatch at n=%llu", m, s, (unsigned long long)bad);
      o.require(bad == 0, "a_n = b_n");
    }
  if (o.pass) o.note("m <= 3, s in [-2, 2], n <= 10^4: all coefficients equal exactly");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria = {
      {1, "euler product vs chain sum", euler_product},
      {2, "functional equation", functional_equation},
      {3, "zero locations and multiplicities", zeros},
      {4, "q-binomial identities", q_binomial_identities},
      {5, "complete symmetric, recurrence, gcd reduction", generating_function_identities},
      {6, "closed forms for (c,1) and (c,c,1)", closed_forms},
      {7, "step-powerful zeta factorization", powerful_factorization},
      {8, "square-case closed form and 2-step list", square_case_closed_form},
      {9, "unitarity classification", unitarity},
      {10, "averages", averages},
      {11, "Eisenstein coefficient identity", eisenstein},
      {12, "two-variable coefficient identity", two_variable_coefficients},
  };
  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %2d %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name);
    for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
    if (!o.pass) failed.insert(c.id);
  }
  std::printf("%zu/%zu passed", criteria.size() - failed.size(), criteria.size());
  if (!failed.empty()) {
    std::printf("; failing:");
    for (int id : failed) std::printf(" %d%s", id, kKnownFailures.count(id) ? " (known)" : "");
  }
  std::printf("\n");
  if (strict) return failed.empty() ? 0 : 1;
  return failed == kKnownFailures ? 0 : 1;
}
