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

#include "cayley_nav/normal_form.hpp"

#include <string>

#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/euclid.hpp"

namespace cayley {

namespace {

void premultiply_word(MatZ& m, const Word& w) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) m.premultiply(*it);
}

// Word for X = e(i,j) e(j,i)^-1 e(i,j), which sends row j to row i and -row i
// to row j.
Word swap_gadget(int n, int i, int j) {
  return Word(n, {Letter::elementary(i, j), Letter::elementary(j, i, -1),
                  Letter::elementary(i, j)});
}

bool upper_triangular(const MatZ& m) {
  const int n = m.dimension();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < r; ++c)
      if (m(r, c) != 0) return false;
  return true;
}

// Concatenates pieces applied in order p_1, p_2, ... as p_t ... p_1.
Word compose_premultiplications(int n, const std::vector<Word>& pieces) {
  Word w(n);
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) w.append(*it);
  return w;
}

}  // namespace

PhaseResult column_clear_phase(const MatZ& m, int col) {
  const int n = m.dimension();
  if (n < 3) throw UnsupportedDimensionError("column clearing needs N >= 3");
  if (col < 1 || col >= n) throw InternalStateError("column index out of range");
  for (int c = 0; c + 1 < col; ++c) {
    if (abs(m(c, c)) != 1) throw InternalStateError("earlier pivot is not +-1");
    for (int r = c + 1; r < n; ++r)
      if (m(r, c) != 0) throw InternalStateError("earlier column not cleared");
  }

  PhaseResult out{m, Word(n)};
  const AcceleratedResult euclid = [&] {
    try {
      return accelerated_reduce(m.column(col - 1), n - col + 1);
    } catch (const DomainError&) {
      throw InternalStateError("column " + std::to_string(col) + " vanishes below the diagonal");
    }
  }();
  for (const auto& s : euclid.steps) out.matrix.add_row_multiple(s.target - 1, s.source - 1, s.multiplier);
  out.word = euclid.word;

  const int r = euclid.survivor;
  if (abs(out.matrix(r - 1, col - 1)) != 1) {
    throw InternalStateError("column " + std::to_string(col) + " has no unit pivot");
  }
  if (r != col) {
    const Word g = swap_gadget(n, col, r);
    premultiply_word(out.matrix, g);
    out.word = g * out.word;
  }
  return out;
}

PhaseResult sign_fix_phase(const MatZ& m) {
  const int n = m.dimension();
  if (!upper_triangular(m)) throw InternalStateError("sign fixing needs an upper triangular matrix");
  std::vector<int> negative;
  for (int k = 0; k < n; ++k) {
    if (m(k, k) == -1) negative.push_back(k + 1);
    else if (m(k, k) != 1) throw InternalStateError("diagonal entry is not +-1");
  }
  if (negative.size() % 2 != 0) throw InternalStateError("odd number of -1 diagonal entries");

  PhaseResult out{m, Word(n)};
  std::vector<Word> pieces;
  for (std::size_t t = 0; t < negative.size(); t += 2) {
    const Word x = swap_gadget(n, negative[t], negative[t + 1]);
    const Word g = x * x;
    premultiply_word(out.matrix, g);
    pieces.push_back(g);
  }
  out.word = compose_premultiplications(n, pieces);
  return out;
}

PhaseResult upper_clear_phase(const MatZ& m) {
  const int n = m.dimension();
  if (!upper_triangular(m)) throw InternalStateError("upper clearing needs an upper triangular matrix");
  for (int k = 0; k < n; ++k)
    if (m(k, k) != 1) throw InternalStateError("upper clearing needs a unipotent matrix");

  PhaseResult out{m, Word(n)};
  std::vector<Word> pieces;
  // Column N is cleared first, so every exponent is an entry of the input.
  for (int j = n; j >= 2; --j) {
    for (int i = 1; i < j; ++i) {
      const BigInt c = -out.matrix(i - 1, j - 1);
      if (c == 0) continue;
      pieces.push_back(compress_power(n, i, j, c));
      out.matrix.add_row_multiple(i - 1, j - 1, c);
    }
  }
  out.word = compose_premultiplications(n, pieces);
  return out;
}

NormalFormResult normal_form_detailed(const MatZ& m) {
  const int n = m.dimension();
  if (n < 3) throw UnsupportedDimensionError("normal form needs N >= 3, got N=" + std::to_string(n));
  if (determinant(m) != 1) throw NotInGroupError("matrix does not have determinant 1");

  NormalFormResult res{Word(n), 0, 0, 0, {}};
  MatZ cur = m;
  std::vector<Word> pieces;
  for (int col = 1; col < n; ++col) {
    PhaseResult ph = column_clear_phase(cur, col);
    res.triangularize_length += ph.word.length();
    res.column_norms.push_back(sup_norm(ph.matrix));
    pieces.push_back(std::move(ph.word));
    cur = std::move(ph.matrix);
  }
  PhaseResult signs = sign_fix_phase(cur);
  res.sign_fix_length = signs.word.length();
  pieces.push_back(std::move(signs.word));

  PhaseResult upper = upper_clear_phase(signs.matrix);
  res.upper_clear_length = upper.word.length();
  pieces.push_back(std::move(upper.word));
  if (!upper.matrix.is_identity()) throw InternalStateError("reduction did not reach the identity");

  // pieces multiply M down to the identity; their product inverts M.
  res.word = compose_premultiplications(n, pieces).inverse().free_reduce();
  return res;
}

Word normal_form(const MatZ& m) { return normal_form_detailed(m).word; }

}  // namespace cayley
