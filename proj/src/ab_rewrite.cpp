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

#include "cayley_nav/ab_rewrite.hpp"

#include <string>

#include "cayley_nav/errors.hpp"
#include "cayley_nav/matrix.hpp"

namespace cayley {

namespace {

const Letter kA = Letter::ab(Symbol::A, 1);
const Letter kAinv = Letter::ab(Symbol::A, -1);
const Letter kB = Letter::ab(Symbol::B, 1);
const Letter kBinv = Letter::ab(Symbol::B, -1);

void check_k(int k, int lo, int n) {
  if (n < 2) throw UnsupportedDimensionError("A/B generators need N >= 2");
  if (k < lo || k > n) {
    throw DomainError("index k=" + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(n) + "]");
  }
}

Word b_power(int n, int s) {
  Word w(n);
  w.push_power(s >= 0 ? kB : kBinv, static_cast<std::size_t>(s >= 0 ? s : -s));
  return w;
}

}  // namespace

Word p_word(int k, int n) {
  check_k(k, 2, n);
  Word w(n);
  w.push_back(kA);
  for (int t = 0; t < k - 2; ++t) {
    w.push_back(kBinv);
    w.push_back(kA);
  }
  w.push_power(kB, static_cast<std::size_t>(k - 2));
  return w;
}

Word n_word(int k, int n) {
  check_k(k, 2, n);
  if (k == 2) return p_word(2, n);
  return (p_word(k, n) * p_word(k - 1, n).inverse()).free_reduce();
}

Word e1k_word(int k, int n) {
  check_k(k, 3, n);
  const Word conj = b_power(n, -1) * n_word(k - 1, n) * b_power(n, 1);
  return (n_word(k, n) * conj.inverse()).free_reduce();
}

Word eij_ab_word(int i, int j, int n) {
  if (n < 2) throw UnsupportedDimensionError("A/B generators need N >= 2");
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw InvalidGeneratorError("invalid elementary generator e(" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  }
  const int d = ((j - i) % n + n) % n;
  const int s = i - 1;
  Word base = d == 1 ? p_word(2, n) : e1k_word(1 + d, n);

  // Conjugation by B sends e_ab to e_{a+1,b+1}, picking up the corner sign
  // for every index that wraps from N to 1.
  int a = 1, b = 1 + d, sign = 1;
  for (int t = 0; t < s; ++t) {
    if (a == n) sign *= b_corner_sign(n);
    if (b == n) sign *= b_corner_sign(n);
    a = a % n + 1;
    b = b % n + 1;
  }
  if (sign < 0) base = base.inverse();
  return (b_power(n, -s) * base * b_power(n, s)).free_reduce();
}

AbTable::AbTable(int n) : n_(n) {
  words_.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) words_.push_back(i == j ? Word(n) : eij_ab_word(i, j, n));
}

const Word& AbTable::word(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) {
    throw InvalidGeneratorError("invalid elementary generator e(" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  }
  return words_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

Word rewrite_word_ab(const Word& w) { return rewrite_word_ab(w, AbTable(w.dimension())); }

Word rewrite_word_ab(const Word& w, const AbTable& table) {
  if (table.dimension() != w.dimension()) throw DomainError("A/B table has the wrong dimension");
  Word out(w.dimension());
  for (const auto& l : w) {
    if (l.alphabet == Alphabet::AB) {
      out.push_back(l);
    } else if (l.exponent > 0) {
      out.append(table.word(l.i, l.j));
    } else {
      out.append(table.word(l.i, l.j).inverse());
    }
  }
  return out.free_reduce();
}

}  // namespace cayley
