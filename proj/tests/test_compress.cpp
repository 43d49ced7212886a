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

#include <random>
#include <set>

#include "doctest.h"

#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/fibonacci.hpp"
#include "cayley_nav/matrix.hpp"
#include "support.hpp"

using namespace cayley;
using cayley::testing::elementary_power;
using cayley::testing::elementary_power_fp;

namespace {

bool indices_within(const Word& w, std::set<int> allowed) {
  for (const auto& l : w)
    if (!allowed.count(l.i) || !allowed.count(l.j)) return false;
  return true;
}

}  // namespace

TEST_CASE("fib_power_word small cases") {
  const Word even0 = fib_power_word(0, Parity::Even);
  CHECK(even0.length() == 6);
  CHECK(eval_word_z(even0).is_identity());
  CHECK(eval_word_z(fib_power_word(0, Parity::Odd)) == elementary_power(3, 1, 3, 1));
  CHECK(eval_word_z(fib_power_word(1, Parity::Even)) == elementary_power(3, 1, 3, 1));
  CHECK(fib_power_word(1, Parity::Even).length() == 14);
  const Word even2 = fib_power_word(2, Parity::Even);
  CHECK(eval_word_z(even2) == elementary_power(3, 1, 3, 3));
  // Counted directly from the template: 6 + 8n letters.
  CHECK(even2.length() == 22);
}

TEST_CASE("fib_power_word evaluates to e13^F") {
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(eval_word_z(fib_power_word(n, Parity::Even)) == elementary_power(3, 1, 3, fib(2 * n)));
    CHECK(eval_word_z(fib_power_word(n, Parity::Odd)) == elementary_power(3, 1, 3, fib(2 * n + 1)));
    CHECK(fib_power_word(n, Parity::Even).length() == 6 + 8 * n);
  }
}

TEST_CASE("compress_power_3 examples") {
  CHECK(compress_power_3(0).empty());
  const Word w4 = compress_power_3(4);
  CHECK(eval_word_z(w4) == elementary_power(3, 1, 3, 4));
  CHECK(w4.length() == zeckendorf_word_length(4));
  const Word w7 = compress_power_3(-7);
  CHECK(w7 == compress_power_3(7).inverse());
  CHECK(eval_word_z(w7) == elementary_power(3, 1, 3, -7));
}

TEST_CASE("compress_power_3 length is 4 + 8n + 2r") {
  for (int m = 1; m <= 2000; ++m) {
    const Word w = compress_power_3(m);
    const auto z = zeckendorf(m);
    const std::size_t expect = 4 + 8 * (z.indices.back() / 2) + 2 * z.indices.size();
    CHECK(w.length() == expect);
    CHECK(eval_word_z(w) == elementary_power(3, 1, 3, m));
  }
}

TEST_CASE("compress_power examples") {
  CHECK(compress_power(5, 2, 4, 0).empty());
  for (int m = -1000; m <= 1000; ++m) {
    const Word w = compress_power(3, 1, 3, m);
    CHECK(eval_word_z(w) == elementary_power(3, 1, 3, m));
    CHECK(static_cast<double>(w.length()) <= zeckendorf_length_bound(m));
  }
  const Word w = compress_power(4, 3, 1, 13);
  CHECK(eval_word_z(w) == elementary_power(4, 3, 1, 13));
  CHECK(indices_within(w, {3, 1, default_aux_index(4, 3, 1)}));
}

TEST_CASE("compress_power short-circuits small exponents") {
  const Word w = compress_power(3, 1, 2, 3);
  CHECK(w.length() == 3);
  CHECK(eval_word_z(w) == elementary_power(3, 1, 2, 3));
}

TEST_CASE("compress_power uses a single auxiliary index") {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int aux = 1; aux <= n; ++aux) {
          if (aux == i || aux == j) continue;
          const Word w = compress_power(n, i, j, 987654, aux);
          CHECK(eval_word_z(w) == elementary_power(n, i, j, 987654));
          CHECK(indices_within(w, {i, j, aux}));
        }
      }
}

TEST_CASE("compress_power on huge exponents") {
  BigInt m = 1;
  for (int k = 0; k < 60; ++k) m *= 1000003;
  const Word w = compress_power(4, 2, 4, m);
  CHECK(eval_word_z(w) == elementary_power(4, 2, 4, m));
  CHECK(static_cast<double>(w.length()) <= zeckendorf_length_bound(m));
  CHECK(eval_word_z(compress_power(4, 2, 4, -m)) == elementary_power(4, 2, 4, -m));
}

TEST_CASE("compress_power errors") {
  CHECK_THROWS_AS(compress_power(2, 1, 2, 5), UnsupportedDimensionError);
  CHECK_THROWS_AS(compress_power(3, 1, 1, 5), InvalidGeneratorError);
  CHECK_THROWS_AS(compress_power(3, 1, 4, 5), InvalidGeneratorError);
  CHECK_THROWS_AS(compress_power(3, 1, 2, 5000, 2), DomainError);
}

TEST_CASE("compress_power_modp") {
  CHECK(compress_power_modp(3, 1, 2, 0, 7).empty());
  CHECK(compress_power_modp(3, 1, 2, 14, 7).empty());
  const Word w = compress_power_modp(3, 2, 3, 100, 101);
  REQUIRE(w.length() == 1);
  CHECK(w[0] == Letter::elementary(2, 3, -1));
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t m = dist(rng);
    const Word x = compress_power_modp(4, 1, 3, m, 97);
    CHECK(eval_word_fp(x, 97) == elementary_power_fp(4, 1, 3, m, 97));
  }
  const std::int64_t big_p = 2147483647;
  const Word y = compress_power_modp(3, 3, 1, 123456789, big_p);
  CHECK(eval_word_fp(y, big_p) == elementary_power_fp(3, 3, 1, 123456789, big_p));
  CHECK_THROWS_AS(compress_power_modp(3, 1, 2, 5, 10), DomainError);
}

TEST_CASE("compression letter counts grow logarithmically") {
  for (unsigned long e = 1; e <= 300; e += 20) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, e);
    const Word w = compress_power(3, 1, 3, m);
    CHECK(static_cast<double>(w.length()) <= zeckendorf_length_bound(m));
    CHECK(eval_word_z(w) == elementary_power(3, 1, 3, m));
  }
}
