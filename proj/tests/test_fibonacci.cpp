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

#include <cmath>
#include <random>

#include "doctest.h"

#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/fibonacci.hpp"

using namespace cayley;

TEST_CASE("fib base cases and recurrence") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(100) == BigInt("354224848179261915075"));
  for (unsigned n = 2; n < 300; ++n) CHECK(fib(n) == fib(n - 1) + fib(n - 2));
}

TEST_CASE("zeckendorf examples") {
  CHECK(zeckendorf(1).indices == std::vector<unsigned>{2});
  CHECK(zeckendorf(34).indices == std::vector<unsigned>{9});
  CHECK(zeckendorf(100).indices == std::vector<unsigned>{4, 6, 11});
  CHECK(zeckendorf(4).indices == std::vector<unsigned>{2, 4});
  CHECK_THROWS_AS(zeckendorf(0), DomainError);
  CHECK_THROWS_AS(zeckendorf(-3), DomainError);
}

TEST_CASE("zeckendorf invariants") {
  auto check = [](const BigInt& m) {
    const ZeckendorfDecomposition z = zeckendorf(m);
    REQUIRE_FALSE(z.indices.empty());
    CHECK(z.m == m);
    CHECK(z.indices.front() >= 2);
    BigInt sum = 0;
    for (std::size_t k = 0; k < z.indices.size(); ++k) {
      sum += fib(z.indices[k]);
      if (k > 0) CHECK(z.indices[k] >= z.indices[k - 1] + 2);
    }
    CHECK(sum == m);
    // Greedy: the top summand is the largest Fibonacci number <= m.
    CHECK(fib(z.indices.back() + 1) > m);
  };
  for (int m = 1; m <= 3000; ++m) check(m);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    BigInt m = 1;
    for (int d = 0; d < 4; ++d) m = m * BigInt(static_cast<unsigned long>(rng() >> 2)) + 1;
    check(m);
  }
}

TEST_CASE("zeckendorf_length_bound") {
  const double tau = kGoldenRatio;
  CHECK(zeckendorf_length_bound(1) ==
        doctest::Approx(4 + 6 * std::log(1 + std::sqrt(5.0)) / std::log(tau)));
  CHECK(zeckendorf_length_bound(1) == doctest::Approx(18.64).epsilon(0.001));
  CHECK(zeckendorf_length_bound(0) == doctest::Approx(4.0));
  CHECK(zeckendorf_length_bound(-7) == doctest::Approx(zeckendorf_length_bound(7)));
  for (int m = 1; m <= 100000; ++m) {
    CHECK(static_cast<double>(zeckendorf_word_length(m)) <= zeckendorf_length_bound(m));
  }
}

TEST_CASE("log helpers handle huge integers") {
  BigInt big = 1;
  for (int k = 0; k < 3000; ++k) big *= 10;
  CHECK(log_abs(big) == doctest::Approx(3000 * std::log(10.0)));
  CHECK(log_abs(-big) == doctest::Approx(3000 * std::log(10.0)));
  CHECK(log_golden(kGoldenRatio) == doctest::Approx(1.0));
  CHECK(std::isfinite(zeckendorf_length_bound(big)));
}
