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

#include "cayley_nav/modp_reduction.hpp"

#include <cmath>
#include <string>

#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/euclid.hpp"

namespace cayley {

namespace {

void premultiply_word(MatFp& m, const Word& w) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) m.premultiply(*it);
}

Word swap_gadget(int n, int i, int j) {
  return Word(n, {Letter::elementary(i, j), Letter::elementary(j, i, -1),
                  Letter::elementary(i, j)});
}

}  // namespace

Word diagonal_clear_gadget(std::int64_t a, std::int64_t b, int i, int n, std::int64_t p) {
  require_prime(p);
  if (n < 3) throw UnsupportedDimensionError("diagonal clearing needs N >= 3");
  if (i < 1 || i >= n) throw DomainError("gadget rows must be (i, i+1) with 1 <= i < N");
  a = residue(a, p);
  b = residue(b, p);
  if (a == 0 || b == 0) throw DomainError("diagonal entries must be units mod p");
  const int j = i + 1;
  const std::int64_t a_inv = inverse_mod(a, p);
  const std::int64_t ab_inv = inverse_mod(mul_mod(a, b, p), p);

  // Applied in order; the word lists them last-applied first.
  const Word steps[] = {
      swap_gadget(n, i, j),
      compress_power_modp(n, i, j, -a_inv, p),
      compress_power_modp(n, j, i, a, p),
      compress_power_modp(n, i, j, -mul_mod(b, ab_inv, p), p),
  };
  Word w(n);
  for (int t = 3; t >= 0; --t) w.append(steps[t]);
  return w;
}

Word word_for_modp(const MatFp& m) {
  const int n = m.dimension();
  const std::int64_t p = m.modulus();
  if (n < 3) throw UnsupportedDimensionError("reduction needs N >= 3, got N=" + std::to_string(n));
  if (determinant(m) != 1) throw NotInGroupError("matrix does not have determinant 1 mod p");

  MatFp cur = m;
  std::vector<Word> pieces;
  auto apply = [&](Word w) {
    premultiply_word(cur, w);
    pieces.push_back(std::move(w));
  };

  // Triangularize.
  for (int col = 1; col < n; ++col) {
    Tuple lifted(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) lifted[r] = static_cast<long>(cur(r, col - 1));
    const AcceleratedResult euclid = accelerated_reduce(lifted, n - col + 1);
    for (const auto& s : euclid.steps)
      cur.add_row_multiple(s.target - 1, s.source - 1, residue(s.multiplier, p));
    pieces.push_back(euclid.word);
    if (euclid.survivor != col) apply(swap_gadget(n, col, euclid.survivor));
  }

  // Clear above the diagonal.
  for (int j = 2; j <= n; ++j) {
    const std::int64_t pivot_inv = inverse_mod(cur(j - 1, j - 1), p);
    for (int i = 1; i < j; ++i) {
      const std::int64_t c = residue(-mul_mod(cur(i - 1, j - 1), pivot_inv, p), p);
      if (c == 0) continue;
      pieces.push_back(compress_power_modp(n, i, j, c, p));
      cur.add_row_multiple(i - 1, j - 1, c);
    }
  }

  // Clear the diagonal.
  for (int i = 1; i < n; ++i) {
    if (cur(i - 1, i - 1) == 1) continue;
    apply(diagonal_clear_gadget(cur(i - 1, i - 1), cur(i, i), i, n, p));
  }
  if (!cur.is_identity()) throw InternalStateError("mod-p reduction did not reach the identity");

  Word reduction(n);
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) reduction.append(*it);
  return reduction.inverse().free_reduce();
}

MatFp random_sl_element(int n, std::int64_t p, std::mt19937_64& rng) {
  require_prime(p);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    MatFp m(n, p);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.set(r, c, dist(rng));
    const std::int64_t det = determinant(m);
    if (det == 0) continue;
    // Scaling row 1 by det^-1 maps GL_N onto SL_N with fibres of equal size.
    const std::int64_t s = inverse_mod(det, p);
    for (int c = 0; c < n; ++c) m.set(0, c, mul_mod(m(0, c), s, p));
    return m;
  }
}

ModpReport diameter_upper_bound_report(int n, std::int64_t p, bool exhaustive, std::size_t samples,
                                       std::uint64_t seed, double constant, std::uint64_t budget) {
  require_prime(p);
  ModpReport rep;
  rep.n = n;
  rep.p = p;
  rep.exhaustive = exhaustive;
  rep.constant = constant;
  const double scale = static_cast<double>(n) * n * std::log(static_cast<double>(p));
  rep.bound = constant * scale;

  double total = 0.0;
  auto record = [&](const MatFp& m) {
    const Word w = word_for_modp(m);
    if (!(eval_word_fp(w, p) == m)) rep.all_verified = false;
    rep.max_length = std::max(rep.max_length, w.length());
    total += static_cast<double>(w.length());
    ++rep.elements;
    return w.length();
  };

  if (exhaustive) {
    CayleyBfs bfs(n, p, generator_matrices(n, p, GeneratorSet::Elementary), budget);
    bfs.run();
    rep.diameter = bfs.diameter();
    for (const auto& m : bfs.elements()) {
      const std::size_t len = record(m);
      if (static_cast<int>(len) < *bfs.distance(m)) rep.lengths_dominate_distance = false;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) record(random_sl_element(n, p, rng));
  }
  rep.mean_length = rep.elements ? total / static_cast<double>(rep.elements) : 0.0;
  rep.fitted_constant = static_cast<double>(rep.max_length) / scale;
  return rep;
}

}  // namespace cayley
