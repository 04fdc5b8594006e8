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

// Exact integer and rational types plus overflow-checked machine arithmetic.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace finzeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

inline Integer to_integer(std::int64_t v) {
  if (v >= 0) return to_integer(static_cast<std::uint64_t>(v));
  // -(v + 1) + 1 avoids negating INT64_MIN.
  Integer z = to_integer(static_cast<std::uint64_t>(-(v + 1)));
  z += 1;
  return -z;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ipow(std::uint64_t base, unsigned long exp) {
  return ipow(to_integer(base), exp);
}

/// base^exp for a possibly negative exponent, exactly.
inline Rational rpow(std::uint64_t base, long exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<unsigned long>(exp)));
  Rational r(Integer(1), ipow(base, static_cast<unsigned long>(-exp)));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("uint64 multiplication overflow");
  return r;
}

inline std::uint64_t pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

/// base^exp if it is at most `limit`, otherwise 0.
inline std::uint64_t pow_bounded(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return 0;
    r *= base;
  }
  return r <= limit ? r : 0;
}

}  // namespace finzeta
