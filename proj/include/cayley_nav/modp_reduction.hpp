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

#ifndef CAYLEY_NAV_MODP_REDUCTION_HPP
#define CAYLEY_NAV_MODP_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "cayley_nav/bfs.hpp"
#include "cayley_nav/matrix.hpp"
#include "cayley_nav/word.hpp"

namespace cayley {

// Default for C in the length bound C N^2 ln p.
inline constexpr double kDefaultDiameterConstant = 12.0;

// Word for M in SL_N(F_p), N >= 3: triangularize column by column with the
// accelerated Euclid run on lifts to [0, p-1], clear above the diagonal with
// compressed powers e_ij^{-m_ij / m_jj}, then clear the diagonal pair by pair
// with diagonal_clear_gadget. Throws NotInGroupError unless det M = 1 and
// UnsupportedDimensionError for N < 3.
Word word_for_modp(const MatFp& m);

// Premultiplying a diagonal matrix with entries a, b at positions (i, i+1)
// by this word turns them into 1, ab. Built from
//   e12 e21^-1 e12, e12^{-1/a}, e21^{a}, e12^{-b/(ab)}
// (relabelled to rows i, i+1) applied in that order. Throws DomainError if a
// or b vanishes mod p.
Word diagonal_clear_gadget(std::int64_t a, std::int64_t b, int i, int n, std::int64_t p);

// Uniform element of SL_N(F_p).
MatFp random_sl_element(int n, std::int64_t p, std::mt19937_64& rng);

struct ModpReport {
  int n = 0;
  std::int64_t p = 0;
  bool exhaustive = false;
  std::size_t elements = 0;
  std::size_t max_length = 0;
  double mean_length = 0.0;
  double constant = kDefaultDiameterConstant;
  // constant * N^2 * ln p
  double bound = 0.0;
  // max_length / (N^2 ln p)
  double fitted_constant = 0.0;
  // Exact diameter of Cay(SL_N(F_p), {e_ij}) in exhaustive mode.
  std::optional<int> diameter;
  // Every produced word evaluated back to its matrix.
  bool all_verified = true;
  // Exhaustive mode only: no word was shorter than the BFS distance.
  bool lengths_dominate_distance = true;
};

// Compares produced word lengths against C N^2 ln p. With exhaustive set,
// every group element is reduced and the BFS diameter is attached; this is
// refused with BudgetError above `budget` elements. Otherwise `samples`
// random elements drawn with `seed` are used.
ModpReport diameter_upper_bound_report(int n, std::int64_t p, bool exhaustive, std::size_t samples,
                                       std::uint64_t seed, double constant = kDefaultDiameterConstant,
                                       std::uint64_t budget = kDefaultBfsBudget);

}  // namespace cayley

#endif  // CAYLEY_NAV_MODP_REDUCTION_HPP
