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

#ifndef CAYLEY_NAV_AB_REWRITE_HPP
#define CAYLEY_NAV_AB_REWRITE_HPP

#include <vector>

#include "cayley_nav/word.hpp"

namespace cayley {

// P_k = e12 e23 ... e_{k-1,k} as the literal word A (B^-1 A)^{k-2} B^{k-2},
// of length 3k - 5. Requires 2 <= k <= N.
Word p_word(int k, int n);

// N_k = P_k P_{k-1}^-1, freely reduced to length 4k - 7 (N_2 = P_2 = A). Its
// matrix is the identity plus ones at (1, k), ..., (k-1, k).
Word n_word(int k, int n);

// e_1k = N_k (B^-1 N_{k-1} B)^-1, of length 8k - 16, for 3 <= k <= N.
Word e1k_word(int k, int n);

// e_ij over {A, B}: B^-s w B^s with s = i - 1 and w the word for
// e_{1,1+d}, d = (j - i) mod N, inverted when the corner sign of B turns the
// conjugate into e_ij^-1. Length at most 10N.
Word eij_ab_word(int i, int j, int n);

// All e_ij words of one dimension, computed once.
class AbTable {
 public:
  explicit AbTable(int n);

  int dimension() const noexcept { return n_; }
  const Word& word(int i, int j) const;

 private:
  int n_;
  std::vector<Word> words_;
};

// Substitutes every elementary letter by its A/B word (inverted for exponent
// -1) and freely reduces. A/B letters are kept.
Word rewrite_word_ab(const Word& w);
Word rewrite_word_ab(const Word& w, const AbTable& table);

}  // namespace cayley

#endif  // CAYLEY_NAV_AB_REWRITE_HPP
