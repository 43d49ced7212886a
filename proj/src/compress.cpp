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

#include "cayley_nav/compress.hpp"

#include <set>
#include <string>

#include "cayley_nav/errors.hpp"
#include "cayley_nav/fibonacci.hpp"

namespace cayley {

namespace {

// Where the template indices 1, 2, 3 of SL_3 land in SL_N.
struct IndexMap {
  int one;
  int two;
  int three;

  Letter e12(int e = 1) const { return Letter::elementary(one, two, e); }
  Letter e13(int e = 1) const { return Letter::elementary(one, three, e); }
  Letter e23(int e = 1) const { return Letter::elementary(two, three, e); }
  Letter e32(int e = 1) const { return Letter::elementary(three, two, e); }
};

constexpr IndexMap kIdentityMap{1, 2, 3};

// (e23 e32)^count, or its inverse (e32^-1 e23^-1)^count.
void push_rotation(Word& w, const IndexMap& map, std::size_t count, bool inverted) {
  for (std::size_t k = 0; k < count; ++k) {
    if (inverted) {
      w.push_back(map.e32(-1));
      w.push_back(map.e23(-1));
    } else {
      w.push_back(map.e23());
      w.push_back(map.e32());
    }
  }
}

// a_n b_n (e23 e32) ... a_1 b_1 (e23 e32), with the e12/e13 letters
// inverted when `inverted` (this gives v_m from u_m).
void push_u(Word& w, const IndexMap& map, const std::set<unsigned>& ks, unsigned n,
            bool inverted) {
  const int e = inverted ? -1 : 1;
  for (unsigned t = n; t >= 1; --t) {
    if (ks.count(2 * t)) w.push_back(map.e13(e));
    if (ks.count(2 * t + 1)) w.push_back(map.e12(e));
    push_rotation(w, map, 1, false);
  }
}

Word zeckendorf_word(int dim, const BigInt& m, const IndexMap& map) {
  Word w(dim);
  if (m == 0) return w;
  if (m < 0) return zeckendorf_word(dim, -m, map).inverse();

  const ZeckendorfDecomposition z = zeckendorf(m);
  const std::set<unsigned> ks(z.indices.begin(), z.indices.end());
  const unsigned n = z.indices.back() / 2;

  w.push_back(map.e23(-1));
  push_rotation(w, map, n, true);
  push_u(w, map, ks, n, true);
  w.push_back(map.e23(-1));
  push_rotation(w, map, n, true);
  push_u(w, map, ks, n, false);
  w.push_power(map.e23(), 2);
  return w;
}

void check_compression_args(int n, int i, int j, int aux) {
  if (n < 3) {
    throw UnsupportedDimensionError("power compression needs N >= 3, got N=" +
                                    std::to_string(n));
  }
  auto in_range = [n](int k) { return k >= 1 && k <= n; };
  if (!in_range(i) || !in_range(j) || i == j) {
    throw InvalidGeneratorError("invalid elementary generator e(" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  }
  if (!in_range(aux) || aux == i || aux == j) {
    throw DomainError("auxiliary index " + std::to_string(aux) + " must differ from i and j");
  }
}

}  // namespace

Word fib_power_word(unsigned n, Parity parity) {
  const IndexMap& map = kIdentityMap;
  const auto x = [&](int e) { return parity == Parity::Even ? map.e13(e) : map.e12(e); };
  Word w(3);
  w.push_back(map.e23(-1));
  push_rotation(w, map, n, true);
  w.push_back(x(-1));
  push_rotation(w, map, n, false);
  w.push_back(map.e23(-1));
  push_rotation(w, map, n, true);
  w.push_back(x(1));
  push_rotation(w, map, n, false);
  w.push_power(map.e23(), 2);
  return w;
}

std::size_t zeckendorf_word_length(const BigInt& m) {
  if (m == 0) return 0;
  const ZeckendorfDecomposition z = zeckendorf(abs(m));
  return 4 + 8 * static_cast<std::size_t>(z.indices.back() / 2) + 2 * z.indices.size();
}

Word compress_power_3(const BigInt& m) { return zeckendorf_word(3, m, kIdentityMap); }

int default_aux_index(int n, int i, int j) {
  for (int k = 1; k <= n; ++k)
    if (k != i && k != j) return k;
  throw UnsupportedDimensionError("no auxiliary index available for N=" + std::to_string(n));
}

Word compress_power(int n, int i, int j, const BigInt& m) {
  if (n < 3) {
    throw UnsupportedDimensionError("power compression needs N >= 3, got N=" +
                                    std::to_string(n));
  }
  return compress_power(n, i, j, m, default_aux_index(n, i, j));
}

Word compress_power(int n, int i, int j, const BigInt& m, int aux) {
  check_compression_args(n, i, j, aux);
  Word w(n);
  if (m == 0) return w;
  const BigInt a = abs(m);
  if (a <= zeckendorf_word_length(a)) {
    w.push_power(Letter::elementary(i, j, m > 0 ? 1 : -1), a.get_ui());
    return w;
  }
  return zeckendorf_word(n, m, IndexMap{i, aux, j});
}

Word compress_power_modp(int n, int i, int j, std::int64_t m, std::int64_t p) {
  if (n < 3) {
    throw UnsupportedDimensionError("power compression needs N >= 3, got N=" +
                                    std::to_string(n));
  }
  return compress_power_modp(n, i, j, m, p, default_aux_index(n, i, j));
}

Word compress_power_modp(int n, int i, int j, std::int64_t m, std::int64_t p, int aux) {
  require_prime(p);
  return compress_power(n, i, j, BigInt(static_cast<long>(balanced_residue(m, p))), aux);
}

}  // namespace cayley
