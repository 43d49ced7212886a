// Copyright 2026 The cayley-nav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cayley_nav/fibonacci.hpp"

#include <algorithm>
#include <cmath>

#include "cayley_nav/errors.hpp"

namespace cayley {

BigInt fib(unsigned n) {
  BigInt a = 0, b = 1;
  for (unsigned k = 0; k < n; ++k) {
    BigInt t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

ZeckendorfDecomposition zeckendorf(const BigInt& m) {
  if (m <= 0) throw DomainError("Zeckendorf decomposition needs a positive integer");
  // fibs[k] = F_k for k up to the first index with F_k > m.
  std::vector<BigInt> fibs{0, 1};
  while (fibs.back() <= m) fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);

  ZeckendorfDecomposition z{m, {}};
  BigInt rest = m;
  unsigned k = static_cast<unsigned>(fibs.size() - 1);
  while (rest > 0) {
    while (fibs[k] > rest) --k;
    z.indices.push_back(k);
    rest -= fibs[k];
    // The next summand is strictly smaller than F_{k-1}.
    k = k >= 2 ? k - 2 : 0;
  }
  std::reverse(z.indices.begin(), z.indices.end());
  return z;
}

double log_abs(const BigInt& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_golden(double x) { return std::log(x) / std::log(kGoldenRatio); }

double zeckendorf_length_bound(const BigInt& m) {
  const BigInt a = abs(m);
  const double sqrt5 = std::sqrt(5.0);
  if (a == 0) return 4.0;
  // 1 + a sqrt5, in logs when a is too large for a double.
  const double la = log_abs(a);
  double l;
  if (la < 600.0) {
    l = std::log1p(a.get_d() * sqrt5);
  } else {
    l = la + std::log(sqrt5);
  }
  return 4.0 + 6.0 * l / std::log(kGoldenRatio);
}

}  // namespace cayley
