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
#include <algorithm>
#include <random>

#include "doctest.h"

#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/euclid.hpp"
#include "cayley_nav/matrix.hpp"

using namespace cayley;

namespace {

Tuple T(std::initializer_list<long> xs) {
  Tuple t;
  for (long x : xs) t.emplace_back(x);
  return t;
}

BigInt tuple_gcd(const Tuple& t, std::size_t from = 0) {
  BigInt g = 0;
  for (std::size_t k = from; k < t.size(); ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t[k].get_mpz_t());
  return g;
}

std::size_t nonzero_count(const Tuple& t, std::size_t from = 0) {
  std::size_t c = 0;
  for (std::size_t k = from; k < t.size(); ++k) c += t[k] != 0;
  return c;
}

}  // namespace

TEST_CASE("subtractive_gcd reproduces the worked example") {
  const GcdResult r = subtractive_gcd(T({-32, 8, -12}));
  CHECK(r.gcd == 4);
  REQUIRE(r.trace.step_count() == 6);
  const std::vector<Tuple> expect = {T({-20, 8, -12}), T({-8, 8, -12}), T({-8, 8, -4}),
                                     T({0, 8, -4}),    T({0, 4, -4}),   T({0, 0, -4})};
  Tuple cur = r.trace.initial;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& s = r.trace.steps[k];
    cur[s.target - 1] += s.sign * cur[s.source - 1];
    CHECK(cur == expect[k]);
  }
  CHECK(r.trace.final == T({0, 0, -4}));
}

TEST_CASE("subtractive_gcd edge cases") {
  const GcdResult r = subtractive_gcd(T({0, 0, 7}));
  CHECK(r.gcd == 7);
  CHECK(r.trace.step_count() == 0);
  CHECK(subtractive_gcd(T({-5})).gcd == 5);
  CHECK_THROWS_AS(subtractive_gcd(T({0, 0, 0})), DomainError);
  CHECK_THROWS_AS(subtractive_gcd(Tuple{}), DomainError);
  CHECK_THROWS_AS(subtractive_gcd(T({1, 1000}), 10), BudgetError);
}

TEST_CASE("(1, n) needs n subtractive steps") {
  for (long n = 1; n <= 50; ++n) {
    const GcdResult r = subtractive_gcd(T({1, n}));
    CHECK(r.gcd == 1);
    CHECK(r.trace.step_count() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("subtractive steps shrink the moved entry and keep the gcd") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> dist(-5000, 5000);
  for (int trial = 0; trial < 300; ++trial) {
    Tuple t;
    const int n = 2 + trial % 5;
    for (int k = 0; k < n; ++k) t.emplace_back(dist(rng));
    if (nonzero_count(t) == 0) continue;
    const GcdResult r = subtractive_gcd(t);
    CHECK(r.gcd == tuple_gcd(t));
    Tuple cur = t;
    for (const auto& s : r.trace.steps) {
      const BigInt before = abs(cur[s.target - 1]);
      CHECK(abs(cur[s.source - 1]) <= before);
      cur[s.target - 1] += s.sign * cur[s.source - 1];
      CHECK(abs(cur[s.target - 1]) < before);
    }
    CHECK(cur == r.trace.final);
    CHECK(nonzero_count(cur) == 1);
    CHECK(replay_word_on_tuple(r.trace.as_word(), t) == r.trace.final);
  }
}

TEST_CASE("replay_word_on_tuple") {
  CHECK(replay_word_on_tuple(Word(3), T({1, 2, 3})) == T({1, 2, 3}));
  CHECK(replay_word_on_tuple(Word(3, {Letter::elementary(1, 2)}), T({3, 5, 0})) == T({8, 5, 0}));
  CHECK(replay_word_on_tuple(compress_power(3, 1, 3, 9), T({2, 3, 5})) == T({47, 3, 5}));
  // Right-to-left: e12 e21 acts as e21 first.
  Word w(2, {Letter::elementary(1, 2), Letter::elementary(2, 1)});
  CHECK(replay_word_on_tuple(w, T({1, 0})) == T({2, 1}));
  CHECK(replay_word_on_tuple(w, T({1, 0})) ==
        Tuple{eval_word_z(w)(0, 0), eval_word_z(w)(1, 0)});
}

TEST_CASE("accelerated_reduce examples") {
  const AcceleratedResult a = accelerated_reduce(T({5, 0, 0}), 3);
  CHECK(a.word.empty());
  CHECK(a.final == T({5, 0, 0}));
  CHECK(a.survivor == 1);

  const AcceleratedResult b = accelerated_reduce(T({1, 1000000, 0}), 3);
  CHECK(abs(b.final[b.survivor - 1]) == 1);
  CHECK(nonzero_count(b.final) == 1);
  CHECK(static_cast<double>(b.word.length()) <= accelerated_step_bound(3, 1000000));
  CHECK(b.word.length() < 1000);
  CHECK(replay_word_on_tuple(b.word, b.initial) == b.final);

  const AcceleratedResult c = accelerated_reduce(T({7, -32, 8, -12}), 3);
  CHECK(c.final[0] == 7);
  CHECK(abs(c.final[c.survivor - 1]) == 4);
  CHECK(c.survivor >= 2);
  CHECK(nonzero_count(c.final, 1) == 1);
  CHECK(replay_word_on_tuple(c.word, c.initial) == c.final);
}

TEST_CASE("accelerated_reduce errors") {
  CHECK_THROWS_AS(accelerated_reduce(T({1, 2}), 2), DomainError);
  CHECK_THROWS_AS(accelerated_reduce(T({1, 2, 3}), 1), DomainError);
  CHECK_THROWS_AS(accelerated_reduce(T({1, 2, 3}), 4), DomainError);
  CHECK_THROWS_AS(accelerated_reduce(T({1, 0, 0}), 2), DomainError);
}

TEST_CASE("accelerated_reduce invariants") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(-1'000'000'000, 1'000'000'000);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 6;
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    Tuple t;
    for (int x = 0; x < n; ++x) t.emplace_back(dist(rng));
    const AcceleratedResult r = accelerated_reduce(t, k);
    const std::size_t first = static_cast<std::size_t>(n - k);
    for (std::size_t x = 0; x < first; ++x) CHECK(r.final[x] == t[x]);
    CHECK(nonzero_count(r.final, first) == 1);
    CHECK(static_cast<std::size_t>(r.survivor) > first);
    CHECK(abs(r.final[r.survivor - 1]) == tuple_gcd(t, first));
    CHECK(replay_word_on_tuple(r.word, t) == r.final);
    BigInt max_abs = 0;
    for (std::size_t x = first; x < t.size(); ++x) max_abs = std::max(max_abs, BigInt(abs(t[x])));
    CHECK(static_cast<double>(r.word.length()) <= accelerated_step_bound(k, max_abs));
    // The quotient steps replayed as plain row operations give the same tuple.
    Tuple cur = t;
    for (const auto& s : r.steps) cur[s.target - 1] += s.multiplier * cur[s.source - 1];
    CHECK(cur == r.final);
  }
}

TEST_CASE("accelerated_reduce on a huge tuple") {
  BigInt a = 1, b = 1;
  for (int x = 0; x < 40; ++x) {
    a = a * 1000003 + 7;
    b = b * 999983 + 11;
  }
  const Tuple t = {a, b, a + b, 0};
  const AcceleratedResult r = accelerated_reduce(t, 4);
  CHECK(abs(r.final[r.survivor - 1]) == tuple_gcd(t));
  CHECK(replay_word_on_tuple(r.word, t) == r.final);
  CHECK(static_cast<double>(r.word.length()) <= accelerated_step_bound(4, a + b));
}

TEST_CASE("accelerated_step_bound") {
  CHECK(accelerated_step_bound(3, 1) == doctest::Approx(80.0));
  CHECK(accelerated_step_bound(3, 0) == doctest::Approx(80.0));
  CHECK(accelerated_step_bound(4, 1000, 10.0) == doctest::Approx(30.0 * (1 + std::log(1000.0))));
}
