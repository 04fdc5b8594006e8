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

// Evaluates Z^m_N at a point by the chain sum and by the Euler product, then
// checks the functional equation Z(-s) = N^{ms} Z(s).

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>

#include "finzeta/finite_zeta.hpp"

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 360;
  const int m = argc > 2 ? std::atoi(argv[2]) : 3;
  const std::complex<double> s(0.25, 7.5);

  const auto brute = finzeta::eval_brute(n, m, s);
  const auto euler = finzeta::eval_euler(n, m, s);
  std::printf("N = %llu, m = %d, s = %g%+gi, %llu chains\n", static_cast<unsigned long long>(n), m, s.real(),
              s.imag(), static_cast<unsigned long long>(finzeta::divisor_chains(n, m).count()));
  std::printf("  chain sum     %.15g %+.15gi\n", brute.real(), brute.imag());
  std::printf("  Euler product %.15g %+.15gi\n", euler.real(), euler.imag());

  const auto reflected = finzeta::eval_euler(n, m, -s);
  const auto scaled = std::exp(double(m) * s * std::log(double(n))) * euler;
  std::printf("  |Z(-s) - N^{ms} Z(s)| / |Z(-s)| = %.3e\n", std::abs(reflected - scaled) / std::abs(reflected));
  std::printf("  Z(-1) = %s (exact)\n", finzeta::eval_brute_exact(n, m, -1).get_str().c_str());
  return 0;
}
