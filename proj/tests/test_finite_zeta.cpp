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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "finzeta/finite_zeta.hpp"
#include "oracles.hpp"

namespace fz = finzeta;
using C = std::complex<double>;

namespace {

double rel_err(C a, C b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Eval, ExactExamples) {
  EXPECT_EQ(fz::eval_brute_exact(4, 2, 1), fz::Rational(35, 16));
  EXPECT_EQ(fz::eval_brute_exact(4, 2, -1), fz::Rational(35));
  EXPECT_EQ(fz::eval_brute_exact(6, 1, -1), fz::Rational(12));
  EXPECT_EQ(fz::eval_brute_exact(4, 2, 0), fz::Rational(6));
  EXPECT_EQ(fz::special_value(4, 2, 1), fz::Integer(35));
}

TEST(Eval, RejectsBadArguments) {
  EXPECT_THROW(fz::eval_brute(0, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(fz::eval_euler(4, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(fz::special_value(4, 2, 0), std::invalid_argument);
}

TEST(Eval, BruteMatchesOracleChainSum) {
  const C s(0.7, -1.3);
  for (std::uint64_t n = 1; n <= 60; ++n)
    for (int m = 1; m <= 3; ++m) ASSERT_LT(rel_err(fz::eval_brute(n, m, s), oracle::zeta_chain_sum(n, m, s)), 1e-12);
}

TEST(Eval, SpecialValuesAreIntegers) {
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (int m = 1; m <= 3; ++m)
      for (long k = 1; k <= 3; ++k) ASSERT_TRUE(fz::is_integer(fz::eval_brute_exact(n, m, -k)));
}

TEST(Eval, ValueAtZeroIsChainCount) {
  for (std::uint64_t n = 1; n <= 300; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto count = static_cast<double>(fz::divisor_chains(n, m).count());
      ASSERT_EQ(fz::eval_euler(n, m, 0.0), C(count));
      ASSERT_EQ(fz::eval_brute_exact(n, m, 0), fz::Rational(fz::to_integer(fz::divisor_chains(n, m).count())));
    }
}

TEST(Eval, EulerProductMatchesBrute) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> re(-2, 2), im(-20, 20);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t n = rng() % 500 + 1;
    const int m = static_cast<int>(rng() % 4) + 1;
    const C s(re(rng), im(rng));
    ASSERT_LT(rel_err(fz::eval_euler(n, m, s), fz::eval_brute(n, m, s)), 1e-10) << n << " " << m << " " << s;
  }
}

TEST(Eval, FunctionalEquation) {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(-15, 15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = rng() % 500 + 1;
    const int m = static_cast<int>(rng() % 4) + 1;
    const C s(re(rng), im(rng));
    const C lhs = fz::eval_brute(n, m, -s);
    const C rhs = std::exp(double(m) * s * std::log(double(n))) * fz::eval_brute(n, m, s);
    ASSERT_LT(rel_err(lhs, rhs), 1e-10);
  }
}

TEST(Eval, ExponentSymmetry) {
  for (std::uint64_t p : {2, 3, 5})
    for (int l = 1; l <= 4; ++l)
      for (int m = 1; m <= 4; ++m) {
        const C s(0.3, 1.1);
        ASSERT_LT(rel_err(fz::eval_brute(fz::checked::pow(p, l), m, s), fz::eval_brute(fz::checked::pow(p, m), l, s)),
                  1e-12);
      }
}

TEST(Eval, EulerHandlesVanishingDenominators) {
  const double lp = std::log(2.0);
  // Z^2_2(s) = 1 + 2^-s + 2^-2s
  EXPECT_LT(std::abs(fz::eval_euler(2, 2, C(0, 2 * std::numbers::pi / lp)) - 3.0), 1e-12);
  EXPECT_LT(std::abs(fz::eval_euler(2, 2, C(0, std::numbers::pi / lp)) - 1.0), 1e-12);
  for (int n = -6; n <= 6; ++n) {
    const C s(0, 2 * std::numbers::pi * n / (3 * lp));
    for (std::uint64_t N : {2, 4, 12})
      for (int m = 1; m <= 3; ++m) ASSERT_LT(rel_err(fz::eval_euler(N, m, s), fz::eval_brute(N, m, s)), 1e-10);
  }
}

TEST(Multivar, EulerMatchesDirectSum) {
  const std::vector<fz::Signature> sigs{{1, 1}, {2, 1}, {3, 2, 1}, {2, 2, 1}, {1, 2}};
  const std::vector<C> t{C(0.4, 1.0), C(-0.2, 0.5), C(1.1, -2.0)};
  for (const auto& g : sigs)
    for (std::uint64_t n : {1, 2, 12, 36, 64, 360, 720}) {
      std::span<const C> tt(t.data(), g.size());
      ASSERT_LT(rel_err(fz::eval_multivar(g, n, tt), fz::eval_multivar_brute(g, n, tt)), 1e-10);
    }
}

TEST(Multivar, OnesReduceToSingleVariable) {
  const C s(0.25, 3.0);
  const std::vector<C> t(3, s);
  for (std::uint64_t n = 1; n <= 100; ++n)
    ASSERT_LT(rel_err(fz::eval_multivar(fz::Signature::ones(3), n, t), fz::eval_brute(n, 3, s)), 1e-10);
}

TEST(Zeros, CountsAndOrders) {
  // N = 2, m = 2 at s = 2 pi i / log 2: two numerator factors vanish, one denominator too.
  EXPECT_EQ(fz::zero_multiplicity(2, 2, 2, 1, 2), 2);
  EXPECT_EQ(fz::zero_order(2, 2, 2, 1, 2), 0);
  // s = 2 pi i / (3 log 2) is a simple zero.
  EXPECT_EQ(fz::zero_multiplicity(2, 2, 2, 2, 1), 1);
  EXPECT_EQ(fz::zero_order(2, 2, 2, 2, 1), 1);
  EXPECT_THROW(fz::zero_order(2, 2, 3, 1, 1), std::invalid_argument);
  EXPECT_THROW(fz::zero_order(2, 2, 2, 3, 1), std::invalid_argument);
  EXPECT_TRUE(fz::predicted_zeros(1, 2, 30).empty());
}

TEST(Zeros, NetOrderPredictsVanishing) {
  for (std::uint64_t N : {2, 6, 12, 8, 30})
    for (int m = 1; m <= 3; ++m)
      for (const auto& z : fz::predicted_zeros(N, m, 30)) {
        const double v = std::abs(fz::eval_brute(N, m, z.s));
        if (z.order > 0)
          ASSERT_LT(v, 1e-9) << N << " " << m << " " << z.s;
        else
          ASSERT_GT(v, 1e-3) << N << " " << m << " " << z.s;
      }
}

TEST(Zeros, CircleEstimateMatchesNetOrder) {
  for (std::uint64_t N : {2, 4, 12})
    for (int m = 1; m <= 3; ++m)
      for (const auto& z : fz::predicted_zeros(N, m, 12)) {
        const double est = fz::estimate_zero_order(N, m, z.s);
        ASSERT_NEAR(est, z.order, 0.05) << N << " " << m << " " << z.s;
      }
}

TEST(Zeros, EveryZeroIsSimple) {
  // The order counts multiples of d among e+1..e+m minus those among 1..m,
  // which differ by at most one.
  for (std::uint64_t e = 1; e <= 10; ++e)
    for (int m = 1; m <= 8; ++m)
      for (int k = 1; k <= m; ++k)
        for (long n = 1; n <= 3 * static_cast<long>(e + k); ++n) {
          const int order = fz::zero_order(fz::checked::pow(2, static_cast<unsigned>(e)), m, 2, k, n);
          ASSERT_GE(order, 0);
          ASSERT_LE(order, 1);
        }
}

TEST(OffAxisScan, NoZerosOffTheAxis) {
  const auto r = fz::off_axis_scan(6, 2, 0.05, 0.5, 5, 0.05);
  EXPECT_GT(r.min_abs, 1e-6);
  EXPECT_GT(r.points, 0u);
}
