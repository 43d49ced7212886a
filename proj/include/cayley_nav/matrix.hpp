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

#ifndef CAYLEY_NAV_MATRIX_HPP
#define CAYLEY_NAV_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cayley_nav/modular.hpp"
#include "cayley_nav/word.hpp"

namespace cayley {

// Square matrix with arbitrary-precision integer entries, row-major.
// Element access is 0-based; letters and row operations that talk about
// generators use the 1-based indices of Letter.
class MatZ {
 public:
  explicit MatZ(int n);
  static MatZ identity(int n);
  static MatZ from_rows(const std::vector<std::vector<BigInt>>& rows);

  int dimension() const noexcept { return n_; }
  BigInt& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  const BigInt& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r * n_ + c)];
  }

  std::vector<BigInt> column(int c) const;
  bool is_identity() const;

  // row[target] += k * row[source]; 0-based rows.
  void add_row_multiple(int target, int source, const BigInt& k);

  // this <- L * this and this <- this * L.
  void premultiply(const Letter& l);
  void postmultiply(const Letter& l);

  bool operator==(const MatZ&) const = default;

 private:
  int n_;
  std::vector<BigInt> a_;
};

MatZ operator*(const MatZ& x, const MatZ& y);

// Square matrix over Z/pZ with entries kept in [0, p).
class MatFp {
 public:
  MatFp(int n, std::int64_t p);
  static MatFp identity(int n, std::int64_t p);
  static MatFp reduce(const MatZ& m, std::int64_t p);

  int dimension() const noexcept { return n_; }
  std::int64_t modulus() const noexcept { return p_; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  // Stores the residue of v.
  void set(int r, int c, std::int64_t v);

  bool is_identity() const;
  const std::vector<std::int64_t>& entries() const noexcept { return a_; }

  void add_row_multiple(int target, int source, std::int64_t k);
  void premultiply(const Letter& l);
  void postmultiply(const Letter& l);

  bool operator==(const MatFp&) const = default;

 private:
  int n_;
  std::int64_t p_;
  std::vector<std::int64_t> a_;
};

MatFp operator*(const MatFp& x, const MatFp& y);

// Identity with (i, j) entry e; i, j are 1-based.
MatZ elementary_matrix(int n, int i, int j, int e);
// A_N = e_12; B_N has superdiagonal ones and (N, 1) entry (-1)^(N-1).
// exponent -1 gives the exact inverse.
MatZ ab_matrix(int n, Symbol symbol, int e);
MatZ letter_matrix(int n, const Letter& l);

// Left-to-right product of the word's letters.
MatZ eval_word_z(const Word& w);
// Evaluation carried out natively mod p.
MatFp eval_word_fp(const Word& w, std::int64_t p);

// max |entry|
BigInt sup_norm(const MatZ& m);

// Fraction-free (Bareiss) elimination.
BigInt determinant(const MatZ& m);
std::int64_t determinant(const MatFp& m);

// Gauss-Jordan inverse mod p. Throws DomainError when m is singular.
MatFp inverse(const MatFp& m);

// (-1)^(N-1), the corner entry of B_N.
inline int b_corner_sign(int n) noexcept { return n % 2 == 0 ? -1 : 1; }

namespace detail {

// Performs X <- L * X through row primitives: add(t, s, e) is
// row_t += e * row_s, swap(a, b) exchanges rows, negate(t) flips a row.
// Row indices are 0-based.
template <class Add, class Swap, class Negate>
void apply_letter_to_rows(const Letter& l, int n, Add&& add, Swap&& swap, Negate&& negate) {
  if (l.alphabet == Alphabet::Elementary) {
    add(l.i - 1, l.j - 1, l.exponent);
    return;
  }
  if (l.symbol == Symbol::A) {
    add(0, 1, l.exponent);
    return;
  }
  const bool flip = b_corner_sign(n) < 0;
  if (l.exponent == 1) {
    // (B X)[r] = X[r+1], (B X)[n-1] = s X[0]
    for (int r = 0; r + 1 < n; ++r) swap(r, r + 1);
    if (flip) negate(n - 1);
  } else {
    // (B^-1 X)[r] = X[r-1], (B^-1 X)[0] = s X[n-1]
    for (int r = n - 1; r > 0; --r) swap(r, r - 1);
    if (flip) negate(0);
  }
}

// Performs X <- X * L through the same primitives acting on columns.
template <class Add, class Swap, class Negate>
void apply_letter_to_columns(const Letter& l, int n, Add&& add, Swap&& swap, Negate&& negate) {
  if (l.alphabet == Alphabet::Elementary) {
    add(l.j - 1, l.i - 1, l.exponent);
    return;
  }
  if (l.symbol == Symbol::A) {
    add(1, 0, l.exponent);
    return;
  }
  const bool flip = b_corner_sign(n) < 0;
  if (l.exponent == 1) {
    // (X B)[:, c] = X[:, c-1], (X B)[:, 0] = s X[:, n-1]
    for (int c = n - 1; c > 0; --c) swap(c, c - 1);
    if (flip) negate(0);
  } else {
    for (int c = 0; c + 1 < n; ++c) swap(c, c + 1);
    if (flip) negate(n - 1);
  }
}

}  // namespace detail

}  // namespace cayley

#endif  // CAYLEY_NAV_MATRIX_HPP
