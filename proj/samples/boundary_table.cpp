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

// Prints the unitarity verdict of G_{k,l} and the step-powerful numbers it governs.

#include <cstdio>

#include "finzeta/boundary.hpp"
#include "finzeta/powerful.hpp"

int main() {
  for (int k = 1; k <= 5; ++k) {
    for (int l = 1; l <= 3; ++l) {
      const auto v = finzeta::classify(k, l);
      std::printf("k=%d l=%d  G = %-28s %s", k, l, v.polynomial.to_string().c_str(),
                  v.unitary ? "unitary" : "not unitary");
      if (v.witness) std::printf(" (root of modulus %.6f)", v.witness->modulus);
      std::printf("\n");
    }
  }
  std::printf("\n2-step 2-powerful numbers up to 300:");
  for (auto n : finzeta::sieve_step_powerful(300, {2, 2})) std::printf(" %llu", static_cast<unsigned long long>(n));
  std::printf("\n");
  return 0;
}
