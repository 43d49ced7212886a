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

#include "cayley_nav/modular.hpp"

#include <string>

#include "cayley_nav/errors.hpp"

namespace cayley {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= p; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a supported prime");
  }
}

std::int64_t residue(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t residue(const BigInt& a, std::int64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t balanced_residue(std::int64_t a, std::int64_t p) {
  const std::int64_t r = residue(a, p);
  return 2 * r > p ? r - p : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = residue(a, p);
  std::int64_t s0 = 0, s1 = 1;
  if (r1 == 0) throw DomainError("0 has no inverse mod " + std::to_string(p));
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw DomainError("element not invertible mod " + std::to_string(p));
  return residue(s0, p);
}

}  // namespace cayley
