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

#ifndef CAYLEY_NAV_NORMAL_FORM_HPP
#define CAYLEY_NAV_NORMAL_FORM_HPP

#include <cstddef>
#include <vector>

#include "cayley_nav/matrix.hpp"
#include "cayley_nav/word.hpp"

namespace cayley {

// Outcome of one reduction phase: eval_word_z(word) * input == matrix.
struct PhaseResult {
  MatZ matrix;
  Word word;
};

// Clears column `col` (1-based, col < N) below the diagonal. Columns left of
// `col` must already be cleared with +-1 pivots. Runs the accelerated Euclid
// on rows col..N, then moves the surviving +-1 up to (col, col) with
//   e(col, r) e(r, col)^-1 e(col, r)
// which puts row r into row col and -row col into row r.
PhaseResult column_clear_phase(const MatZ& m, int col);

// Upper triangular input with +-1 diagonal: flips pairs of -1 diagonal
// entries, in increasing index order, with (e_ij e_ji^-1 e_ij)^2.
PhaseResult sign_fix_phase(const MatZ& m);

// Unipotent upper triangular input: premultiplies by compressed powers
// e_ij^{-m_ij} of the input entries, i = 1..j-1. The word reads column 2
// first; column N acts first, which leaves the remaining entries unchanged.
PhaseResult upper_clear_phase(const MatZ& m);

struct NormalFormResult {
  // eval_word_z(word) == input. Phase lengths are counted before the final
  // free reduction.
  Word word;
  std::size_t triangularize_length = 0;
  std::size_t sign_fix_length = 0;
  std::size_t upper_clear_length = 0;
  // sup-norm after each column of the triangularization, M_1 .. M_{N-1}.
  std::vector<BigInt> column_norms;
};

// Word for M in SL_N(Z), N >= 3, read off from the reduction of M to the
// identity by row operations. Throws UnsupportedDimensionError for N < 3 and
// NotInGroupError unless det M = 1.
NormalFormResult normal_form_detailed(const MatZ& m);
Word normal_form(const MatZ& m);

}  // namespace cayley

#endif  // CAYLEY_NAV_NORMAL_FORM_HPP
