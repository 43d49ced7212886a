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

#ifndef CAYLEY_NAV_EUCLID_HPP
#define CAYLEY_NAV_EUCLID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayley_nav/modular.hpp"
#include "cayley_nav/word.hpp"

namespace cayley {

using Tuple = std::vector<BigInt>;

// One subtractive step a[target] <- a[target] + sign * a[source]. Indices
// are 1-based so that the step is exactly the row operation of the letter
// e(target, source)^sign.
struct TupleStep {
  int target;
  int source;
  int sign;

  bool operator==(const TupleStep&) const = default;
};

struct EuclidTrace {
  Tuple initial;
  Tuple final;
  std::vector<TupleStep> steps;

  std::size_t step_count() const noexcept { return steps.size(); }
  // The word whose right-to-left action on `initial` performs the steps.
  Word as_word() const;
};

struct GcdResult {
  BigInt gcd;
  EuclidTrace trace;
};

// Deterministic subtractive Euclid. Each step takes p, q with the largest and
// second largest |a| (ties: p minimal, then q minimal) and moves a[p] by
// +-a[q] towards zero. Stops once a single entry is nonzero. Throws
// DomainError for the all-zero tuple and BudgetError once more than
// max_steps steps would be needed.
GcdResult subtractive_gcd(const Tuple& tuple, std::size_t max_steps = SIZE_MAX);

// A division step a[target] <- a[target] + multiplier * a[source], 1-based.
struct QuotientStep {
  int target;
  int source;
  BigInt multiplier;
};

struct AcceleratedResult {
  Word word;
  Tuple initial;
  Tuple final;
  std::vector<QuotientStep> steps;
  // 1-based position of the surviving entry +-gcd.
  int survivor = 0;

  std::size_t elementary_step_count() const noexcept { return word.length(); }
};

// Reduces the last k entries of the tuple to a single +-gcd using division
// quotients, each realized by a compressed power e_pq^c. The first two active
// entries are reduced first, then the remaining ones are folded in index
// order. Entries outside the active range are never touched when k >= 3; for
// k = 2 the auxiliary index lies outside and is disturbed only transiently.
// Throws DomainError when N < 3, k < 2, k > N or the active entries are all
// zero.
AcceleratedResult accelerated_reduce(const Tuple& tuple, int k);

// Applies the word's letters right-to-left to the tuple as a column vector.
Tuple replay_word_on_tuple(const Word& w, Tuple tuple);

// Default for the constant K in the step bound K (k-1) (1 + ln n).
inline constexpr double kDefaultEuclidConstant = 40.0;

// K (k - 1) (1 + ln n), n = max |active entry|.
double accelerated_step_bound(int k, const BigInt& max_abs, double constant = kDefaultEuclidConstant);

}  // namespace cayley

#endif  // CAYLEY_NAV_EUCLID_HPP
