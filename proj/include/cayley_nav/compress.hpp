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

#ifndef CAYLEY_NAV_COMPRESS_HPP
#define CAYLEY_NAV_COMPRESS_HPP

#include <cstddef>
#include <cstdint>

#include "cayley_nav/modular.hpp"
#include "cayley_nav/word.hpp"

namespace cayley {

enum class Parity { Even, Odd };

// The SL_3 word
//   e23^-1 (e23 e32)^-n x^-1 (e23 e32)^n e23^-1 (e23 e32)^-n x (e23 e32)^n e23^2
// with x = e13 (Even) or x = e12 (Odd). It equals e13^F_{2n} resp.
// e13^F_{2n+1}.
Word fib_power_word(unsigned n, Parity parity);

// Length 4 + 8n + 2r of the Zeckendorf-built word for m != 0, where r is the
// number of summands of |m| and n = floor(k_r / 2) for the largest index k_r.
// Zero for m == 0.
std::size_t zeckendorf_word_length(const BigInt& m);

// The Zeckendorf-built word w_m over SL_3 evaluating to e13^m. m == 0 gives
// the empty word, m < 0 the inverse of w_{-m}. Never shortened.
Word compress_power_3(const BigInt& m);

// A word equal to e_ij^m in SL_N(Z), N >= 3, of length at most
// 4 + 6 log_tau(1 + |m| sqrt 5). The SL_3 template is relabelled along
// 1 -> i, 2 -> aux, 3 -> j with aux the smallest index outside {i, j}.
// When |m| does not exceed the template length the plain power e_ij^m is
// returned instead.
Word compress_power(int n, int i, int j, const BigInt& m);

// Same, with an explicit auxiliary index aux not in {i, j}.
Word compress_power(int n, int i, int j, const BigInt& m, int aux);

// A word equal to e_ij^m in SL_N(F_p); m is first replaced by its
// absolutely least residue mod p.
Word compress_power_modp(int n, int i, int j, std::int64_t m, std::int64_t p);
Word compress_power_modp(int n, int i, int j, std::int64_t m, std::int64_t p, int aux);

// Smallest index in 1..n outside {i, j}.
int default_aux_index(int n, int i, int j);

}  // namespace cayley

#endif  // CAYLEY_NAV_COMPRESS_HPP
