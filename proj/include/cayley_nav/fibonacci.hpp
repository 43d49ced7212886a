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

#ifndef CAYLEY_NAV_FIBONACCI_HPP
#define CAYLEY_NAV_FIBONACCI_HPP

#include <vector>

#include "cayley_nav/modular.hpp"

namespace cayley {

// F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n.
BigInt fib(unsigned n);

// Golden ratio (1 + sqrt 5) / 2.
inline constexpr double kGoldenRatio = 1.6180339887498948482;

// m = sum of F_k over `indices`, with indices strictly increasing, the
// smallest at least 2 and consecutive ones at least 2 apart.
struct ZeckendorfDecomposition {
  BigInt m;
  std::vector<unsigned> indices;
};

// Greedy decomposition: repeatedly take the largest Fibonacci number not
// exceeding what remains. Throws DomainError for m <= 0.
ZeckendorfDecomposition zeckendorf(const BigInt& m);

// Natural log of |x| for x != 0, accurate for values beyond double range.
double log_abs(const BigInt& x);

// log_tau(x) for x > 0.
double log_golden(double x);

// 4 + 6 log_tau(1 + |m| sqrt 5): length budget of a compressed power e_ij^m.
double zeckendorf_length_bound(const BigInt& m);

}  // namespace cayley

#endif  // CAYLEY_NAV_FIBONACCI_HPP
