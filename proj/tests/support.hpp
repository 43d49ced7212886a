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

#ifndef CAYLEY_NAV_TESTS_SUPPORT_HPP
#define CAYLEY_NAV_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "cayley_nav/matrix.hpp"
#include "cayley_nav/word.hpp"

namespace cayley::testing {

// Uniformly random elementary letters e_ij^{+-1}.
inline Word random_elementary_word(int n, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w(n);
  while (w.length() < length) {
    const int i = idx(rng);
    const int j = idx(rng);
    if (i == j) continue;
    w.push_back(Letter::elementary(i, j, coin(rng) ? 1 : -1));
  }
  return w;
}

inline Word random_ab_word(int n, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  Word w(n);
  for (std::size_t k = 0; k < length; ++k) {
    const int c = coin(rng);
    w.push_back(Letter::ab(c < 2 ? Symbol::A : Symbol::B, c % 2 ? 1 : -1));
  }
  return w;
}

inline MatZ elementary_power(int n, int i, int j, const BigInt& m) {
  MatZ e = MatZ::identity(n);
  e(i - 1, j - 1) = m;
  return e;
}

inline MatFp elementary_power_fp(int n, int i, int j, std::int64_t m, std::int64_t p) {
  MatFp e = MatFp::identity(n, p);
  e.set(i - 1, j - 1, ((m % p) + p) % p);
  return e;
}

}  // namespace cayley::testing

#endif  // CAYLEY_NAV_TESTS_SUPPORT_HPP
