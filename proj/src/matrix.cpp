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

#include "cayley_nav/matrix.hpp"

#include <string>
#include <utility>

#include "cayley_nav/errors.hpp"

namespace cayley {

namespace {

void require_dimension(int n, int min) {
  if (n < min) throw DomainError("dimension must be at least " + std::to_string(min));
}

void require_same_alphabet(const Word& w) { (void)w.alphabet(); }

}  // namespace

// ---------------------------------------------------------------- MatZ

MatZ::MatZ(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  require_dimension(n, 1);
}

MatZ MatZ::identity(int n) {
  MatZ m(n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

MatZ MatZ::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const int n = static_cast<int>(rows.size());
  MatZ m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) throw ParseError("matrix is not square");
    for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<BigInt> MatZ::column(int c) const {
  std::vector<BigInt> v(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool MatZ::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

void MatZ::add_row_multiple(int target, int source, const BigInt& k) {
  if (k == 0) return;
  for (int c = 0; c < n_; ++c) (*this)(target, c) += k * (*this)(source, c);
}

void MatZ::premultiply(const Letter& l) {
  detail::apply_letter_to_rows(
      l, n_,
      [this](int t, int s, int e) {
        for (int c = 0; c < n_; ++c) {
          if (e > 0) (*this)(t, c) += (*this)(s, c);
          else (*this)(t, c) -= (*this)(s, c);
        }
      },
      [this](int a, int b) {
        for (int c = 0; c < n_; ++c) (*this)(a, c).swap((*this)(b, c));
      },
      [this](int t) {
        for (int c = 0; c < n_; ++c) (*this)(t, c) = -(*this)(t, c);
      });
}

void MatZ::postmultiply(const Letter& l) {
  detail::apply_letter_to_columns(
      l, n_,
      [this](int t, int s, int e) {
        for (int r = 0; r < n_; ++r) {
          if (e > 0) (*this)(r, t) += (*this)(r, s);
          else (*this)(r, t) -= (*this)(r, s);
        }
      },
      [this](int a, int b) {
        for (int r = 0; r < n_; ++r) (*this)(r, a).swap((*this)(r, b));
      },
      [this](int t) {
        for (int r = 0; r < n_; ++r) (*this)(r, t) = -(*this)(r, t);
      });
}

MatZ operator*(const MatZ& x, const MatZ& y) {
  const int n = x.dimension();
  if (y.dimension() != n) throw DomainError("dimension mismatch in matrix product");
  MatZ z(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      if (x(r, k) == 0) continue;
      for (int c = 0; c < n; ++c) z(r, c) += x(r, k) * y(k, c);
    }
  return z;
}

// ---------------------------------------------------------------- MatFp

MatFp::MatFp(int n, std::int64_t p)
    : n_(n), p_(p), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  require_dimension(n, 1);
  require_prime(p);
}

MatFp MatFp::identity(int n, std::int64_t p) {
  MatFp m(n, p);
  for (int k = 0; k < n; ++k) m.set(k, k, 1);
  return m;
}

MatFp MatFp::reduce(const MatZ& m, std::int64_t p) {
  const int n = m.dimension();
  MatFp out(n, p);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(r, c, residue(m(r, c), p));
  return out;
}

void MatFp::set(int r, int c, std::int64_t v) {
  a_[static_cast<std::size_t>(r * n_ + c)] = residue(v, p_);
}

bool MatFp::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

void MatFp::add_row_multiple(int target, int source, std::int64_t k) {
  k = residue(k, p_);
  if (k == 0) return;
  for (int c = 0; c < n_; ++c) {
    auto& t = a_[static_cast<std::size_t>(target * n_ + c)];
    t = (t + mul_mod(k, (*this)(source, c), p_)) % p_;
  }
}

void MatFp::premultiply(const Letter& l) {
  detail::apply_letter_to_rows(
      l, n_, [this](int t, int s, int e) { add_row_multiple(t, s, e); },
      [this](int a, int b) {
        for (int c = 0; c < n_; ++c)
          std::swap(a_[static_cast<std::size_t>(a * n_ + c)],
                    a_[static_cast<std::size_t>(b * n_ + c)]);
      },
      [this](int t) {
        for (int c = 0; c < n_; ++c) set(t, c, -(*this)(t, c));
      });
}

void MatFp::postmultiply(const Letter& l) {
  detail::apply_letter_to_columns(
      l, n_,
      [this](int t, int s, int e) {
        for (int r = 0; r < n_; ++r) set(r, t, (*this)(r, t) + e * (*this)(r, s));
      },
      [this](int a, int b) {
        for (int r = 0; r < n_; ++r)
          std::swap(a_[static_cast<std::size_t>(r * n_ + a)],
                    a_[static_cast<std::size_t>(r * n_ + b)]);
      },
      [this](int t) {
        for (int r = 0; r < n_; ++r) set(r, t, -(*this)(r, t));
      });
}

MatFp operator*(const MatFp& x, const MatFp& y) {
  const int n = x.dimension();
  const std::int64_t p = x.modulus();
  if (y.dimension() != n || y.modulus() != p) throw DomainError("mismatch in matrix product");
  MatFp z(n, p);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < n; ++k) acc = (acc + mul_mod(x(r, k), y(k, c), p)) % p;
      z.set(r, c, acc);
    }
  return z;
}

// ---------------------------------------------------------------- generators

MatZ elementary_matrix(int n, int i, int j, int e) {
  require_dimension(n, 2);
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw InvalidGeneratorError("invalid elementary generator e(" + std::to_string(i) + "," +
                                std::to_string(j) + ") for N=" + std::to_string(n));
  }
  MatZ m = MatZ::identity(n);
  m(i - 1, j - 1) = e;
  return m;
}

MatZ ab_matrix(int n, Symbol symbol, int e) {
  require_dimension(n, 2);
  MatZ m = MatZ::identity(n);
  m.premultiply(Letter::ab(symbol, e));
  return m;
}

MatZ letter_matrix(int n, const Letter& l) {
  if (l.alphabet == Alphabet::Elementary) return elementary_matrix(n, l.i, l.j, l.exponent);
  return ab_matrix(n, l.symbol, l.exponent);
}

MatZ eval_word_z(const Word& w) {
  require_same_alphabet(w);
  MatZ m = MatZ::identity(w.dimension());
  for (const auto& l : w) m.postmultiply(l);
  return m;
}

MatFp eval_word_fp(const Word& w, std::int64_t p) {
  require_prime(p);
  require_same_alphabet(w);
  MatFp m = MatFp::identity(w.dimension(), p);
  for (const auto& l : w) m.postmultiply(l);
  return m;
}

BigInt sup_norm(const MatZ& m) {
  BigInt best = 0;
  const int n = m.dimension();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      BigInt a = abs(m(r, c));
      if (a > best) best = a;
    }
  return best;
}

BigInt determinant(const MatZ& m) {
  const int n = m.dimension();
  MatZ a = m;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) a(k, c).swap(a(swap_row, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        BigInt v = a(r, c) * a(k, k) - a(r, k) * a(k, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(r, c) = v;
      }
      a(r, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::int64_t determinant(const MatFp& m) {
  const int n = m.dimension();
  const std::int64_t p = m.modulus();
  MatFp a = m;
  std::int64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a(r, k) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int c = 0; c < n; ++c) {
        const std::int64_t t = a(k, c);
        a.set(k, c, a(pivot, c));
        a.set(pivot, c, t);
      }
      det = residue(-det, p);
    }
    det = mul_mod(det, a(k, k), p);
    const std::int64_t inv = inverse_mod(a(k, k), p);
    for (int r = k + 1; r < n; ++r) {
      if (a(r, k) != 0) a.add_row_multiple(r, k, -mul_mod(a(r, k), inv, p));
    }
  }
  return det;
}

MatFp inverse(const MatFp& m) {
  const int n = m.dimension();
  const std::int64_t p = m.modulus();
  MatFp a = m;
  MatFp inv = MatFp::identity(n, p);
  auto swap_rows = [n](MatFp& x, int r, int s) {
    for (int c = 0; c < n; ++c) {
      const std::int64_t t = x(r, c);
      x.set(r, c, x(s, c));
      x.set(s, c, t);
    }
  };
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a(r, k) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("singular matrix has no inverse");
    swap_rows(a, k, pivot);
    swap_rows(inv, k, pivot);
    const std::int64_t s = inverse_mod(a(k, k), p);
    for (int c = 0; c < n; ++c) {
      a.set(k, c, mul_mod(a(k, c), s, p));
      inv.set(k, c, mul_mod(inv(k, c), s, p));
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || a(r, k) == 0) continue;
      const std::int64_t f = p - a(r, k);
      a.add_row_multiple(r, k, f);
      inv.add_row_multiple(r, k, f);
    }
  }
  return inv;
}

}  // namespace cayley
