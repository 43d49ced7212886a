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

#include "cayley_nav/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/fibonacci.hpp"
#include "cayley_nav/matrix.hpp"

namespace cayley {

namespace {

std::size_t nonzero_count(const Tuple& t) {
  return static_cast<std::size_t>(
      std::count_if(t.begin(), t.end(), [](const BigInt& x) { return x != 0; }));
}

int sgn(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

Word EuclidTrace::as_word() const {
  Word w(static_cast<int>(initial.size()));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    w.push_back(Letter::elementary(it->target, it->source, it->sign));
  return w;
}

GcdResult subtractive_gcd(const Tuple& tuple, std::size_t max_steps) {
  if (nonzero_count(tuple) == 0) throw DomainError("gcd of the all-zero tuple is undefined");
  GcdResult res;
  res.trace.initial = tuple;
  Tuple a = tuple;
  const int n = static_cast<int>(a.size());

  while (nonzero_count(a) > 1) {
    if (res.trace.steps.size() >= max_steps) {
      throw BudgetError("subtractive Euclid exceeds " + std::to_string(max_steps) + " steps");
    }
    int p = 0;
    for (int k = 1; k < n; ++k)
      if (abs(a[k]) > abs(a[p])) p = k;
    int q = p == 0 ? 1 : 0;
    for (int k = 0; k < n; ++k)
      if (k != p && abs(a[k]) > abs(a[q])) q = k;
    // Same signs subtract, opposite signs add.
    const int sign = sgn(a[p]) == sgn(a[q]) ? -1 : 1;
    if (sign > 0) a[p] += a[q];
    else a[p] -= a[q];
    res.trace.steps.push_back({p + 1, q + 1, sign});
  }
  for (const auto& x : a)
    if (x != 0) res.gcd = abs(x);
  res.trace.final = std::move(a);
  return res;
}

AcceleratedResult accelerated_reduce(const Tuple& tuple, int k) {
  const int n = static_cast<int>(tuple.size());
  if (n < 3) throw DomainError("accelerated reduction needs N >= 3");
  if (k < 2 || k > n) {
    throw DomainError("active range size k=" + std::to_string(k) + " must lie in [2, N]");
  }
  const int first = n - k + 1;  // 1-based start of the active range
  Tuple a = tuple;
  if (std::all_of(a.begin() + (first - 1), a.end(), [](const BigInt& x) { return x == 0; })) {
    throw DomainError("active entries are all zero");
  }

  AcceleratedResult res{Word(n), tuple, {}, {}, 0};
  std::vector<Word> pieces;

  auto aux_for = [&](int target, int source) {
    if (k >= 3) {
      for (int t = first; t <= n; ++t)
        if (t != target && t != source) return t;
    }
    return default_aux_index(n, target, source);
  };

  // One quotient step on (target, source): a[target] mod a[source].
  auto divide = [&](int target, int source) {
    BigInt& x = a[target - 1];
    const BigInt& y = a[source - 1];
    BigInt q = abs(x) / abs(y);
    if (sgn(x) == sgn(y)) q = -q;
    x += q * y;
    pieces.push_back(compress_power(n, target, source, q, aux_for(target, source)));
    res.steps.push_back({target, source, q});
  };

  int pivot = 0;
  for (int t = first; t <= n; ++t) {
    if (a[t - 1] == 0) continue;
    if (pivot == 0) {
      pivot = t;
      continue;
    }
    // Euclid on the pair (pivot, t); the larger entry takes the remainder.
    int u = pivot, v = t;
    while (a[u - 1] != 0 && a[v - 1] != 0) {
      if (abs(a[u - 1]) >= abs(a[v - 1])) divide(u, v);
      else divide(v, u);
    }
    pivot = a[u - 1] != 0 ? u : v;
  }
  res.survivor = pivot;

  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) res.word.append(*it);
  res.final = std::move(a);
  return res;
}

Tuple replay_word_on_tuple(const Word& w, Tuple tuple) {
  const int n = w.dimension();
  if (static_cast<int>(tuple.size()) != n) throw DomainError("tuple size differs from word dimension");
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    detail::apply_letter_to_rows(
        *it, n,
        [&](int t, int s, int e) {
          if (e > 0) tuple[t] += tuple[s];
          else tuple[t] -= tuple[s];
        },
        [&](int x, int y) { tuple[x].swap(tuple[y]); },
        [&](int t) { tuple[t] = -tuple[t]; });
  }
  return tuple;
}

double accelerated_step_bound(int k, const BigInt& max_abs, double constant) {
  const double ln = max_abs > 1 ? log_abs(max_abs) : 0.0;
  return constant * static_cast<double>(k - 1) * (1.0 + ln);
}

}  // namespace cayley
