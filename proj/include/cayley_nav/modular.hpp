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

#ifndef CAYLEY_NAV_MODULAR_HPP
#define CAYLEY_NAV_MODULAR_HPP

#include <cstdint>

#include <gmpxx.h>

namespace cayley {

using BigInt = mpz_class;

// Largest modulus accepted anywhere in the library. Products of two residues
// stay well inside int64.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

bool is_prime(std::int64_t p);

// Throws DomainError unless p is a prime in [2, kMaxModulus].
void require_prime(std::int64_t p);

// Representative in [0, p).
std::int64_t residue(std::int64_t a, std::int64_t p);
std::int64_t residue(const BigInt& a, std::int64_t p);

// Absolutely least representative, in (-p/2, p/2].
std::int64_t balanced_residue(std::int64_t a, std::int64_t p);

// Inverse of a modulo p by the extended Euclidean algorithm. Throws
// DomainError when a is 0 mod p.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;
}

}  // namespace cayley

#endif  // CAYLEY_NAV_MODULAR_HPP
