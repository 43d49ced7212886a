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

#include "cayley_nav/bfs.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "cayley_nav/errors.hpp"

namespace cayley {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw DomainError("integer overflow in SL_2(Z) ball");
  return r;
}

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const noexcept {
    std::size_t h = 0;
    for (auto v : m) h = h * 1000003u ^ std::hash<std::int64_t>{}(v);
    return h;
  }
};

}  // namespace

BigInt group_order_sl(int n, std::int64_t p) {
  BigInt order = 1;
  BigInt pp = p;
  BigInt pk = p;
  for (int k = 2; k <= n; ++k) {
    pk *= pp;
    order *= pk - 1;
  }
  BigInt q;
  mpz_pow_ui(q.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(n * (n - 1) / 2));
  return order * q;
}

std::vector<MatFp> symmetrize(const std::vector<MatFp>& gens) {
  std::vector<MatFp> out;
  auto add = [&](const MatFp& g) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  };
  for (const auto& g : gens) {
    add(g);
    add(inverse(g));
  }
  return out;
}

std::vector<MatFp> generator_matrices(int n, std::int64_t p, GeneratorSet set) {
  std::vector<MatFp> gens;
  if (set == GeneratorSet::Elementary) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) {
          gens.push_back(MatFp::reduce(elementary_matrix(n, i, j, 1), p));
          gens.push_back(MatFp::reduce(elementary_matrix(n, i, j, -1), p));
        }
  } else {
    for (Symbol s : {Symbol::A, Symbol::B}) {
      gens.push_back(MatFp::reduce(ab_matrix(n, s, 1), p));
      gens.push_back(MatFp::reduce(ab_matrix(n, s, -1), p));
    }
  }
  std::vector<MatFp> out;
  for (const auto& g : gens)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

CayleyBfs::CayleyBfs(int n, std::int64_t p, std::vector<MatFp> gens, std::uint64_t budget)
    : n_(n), p_(p), gens_(std::move(gens)) {
  require_prime(p);
  const BigInt order = group_order_sl(n, p);
  if (order > BigInt(static_cast<unsigned long>(budget))) {
    throw BudgetError("|SL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")| = " +
                      order.get_str() + " exceeds the BFS budget " + std::to_string(budget));
  }
  BigInt states;
  mpz_pow_ui(states.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t(),
             static_cast<unsigned long>(n * n));
  if (states > BigInt(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw BudgetError("matrices of this size do not pack into 64 bits");
  }
  for (const auto& g : gens_) {
    if (g.dimension() != n || g.modulus() != p) throw DomainError("generator has the wrong shape");
  }
  const std::uint64_t id = pack(MatFp::identity(n, p));
  dist_.emplace(id, 0);
  order_.push_back(id);
  frontier_.push_back(id);
  histogram_.push_back(1);
}

std::uint64_t CayleyBfs::pack(const MatFp& m) const {
  std::uint64_t key = 0;
  for (auto v : m.entries()) key = key * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(v);
  return key;
}

MatFp CayleyBfs::unpack(std::uint64_t key) const {
  MatFp m(n_, p_);
  for (int k = n_ * n_ - 1; k >= 0; --k) {
    m.set(k / n_, k % n_, static_cast<std::int64_t>(key % static_cast<std::uint64_t>(p_)));
    key /= static_cast<std::uint64_t>(p_);
  }
  return m;
}

bool CayleyBfs::expand_level() {
  if (frontier_.empty()) return false;
  const auto level = static_cast<std::uint32_t>(histogram_.size());
  std::vector<std::uint64_t> next;
  for (auto key : frontier_) {
    const MatFp g = unpack(key);
    for (const auto& s : gens_) {
      const std::uint64_t k = pack(s * g);
      if (dist_.emplace(k, level).second) next.push_back(k);
    }
  }
  frontier_ = std::move(next);
  if (frontier_.empty()) return false;
  order_.insert(order_.end(), frontier_.begin(), frontier_.end());
  histogram_.push_back(frontier_.size());
  return true;
}

void CayleyBfs::run() {
  while (expand_level()) {
  }
}

std::optional<int> CayleyBfs::run_until(const MatFp& target) {
  const std::uint64_t key = pack(target);
  for (;;) {
    if (auto it = dist_.find(key); it != dist_.end()) return static_cast<int>(it->second);
    if (!expand_level()) return std::nullopt;
  }
}

std::optional<int> CayleyBfs::distance(const MatFp& m) const {
  if (auto it = dist_.find(pack(m)); it != dist_.end()) return static_cast<int>(it->second);
  return std::nullopt;
}

std::vector<MatFp> CayleyBfs::elements() const {
  std::vector<MatFp> out;
  out.reserve(order_.size());
  for (auto k : order_) out.push_back(unpack(k));
  return out;
}

DiameterResult bfs_diameter(int n, std::int64_t p, GeneratorSet set, std::uint64_t budget) {
  require_prime(p);
  return bfs_diameter(n, p, generator_matrices(n, p, set), budget);
}

DiameterResult bfs_diameter(int n, std::int64_t p, const std::vector<MatFp>& gens,
                            std::uint64_t budget) {
  CayleyBfs bfs(n, p, symmetrize(gens), budget);
  bfs.run();
  return {bfs.diameter(), bfs.histogram()};
}

int bfs_distance_fp(const MatFp& m, const std::vector<MatFp>& gens, std::uint64_t budget) {
  CayleyBfs bfs(m.dimension(), m.modulus(), symmetrize(gens), budget);
  if (auto d = bfs.run_until(m)) return *d;
  throw DomainError("matrix is not in the subgroup generated by the given set");
}

std::map<Mat2, int> bfs_ball_sl2z(int radius, int limit) {
  if (radius > limit) {
    throw BudgetError("SL_2(Z) ball radius " + std::to_string(radius) + " exceeds the limit " +
                      std::to_string(limit));
  }
  if (radius < 0) throw DomainError("radius must be non-negative");
  // Left multiplication by e12^e: row0 += e row1; by e21^e: row1 += e row0.
  auto step = [](const Mat2& m, int which, int e) {
    Mat2 r = m;
    if (which == 0) {
      r[0] = checked_add(m[0], e * m[2]);
      r[1] = checked_add(m[1], e * m[3]);
    } else {
      r[2] = checked_add(m[2], e * m[0]);
      r[3] = checked_add(m[3], e * m[1]);
    }
    return r;
  };
  std::unordered_map<Mat2, int, Mat2Hash> dist;
  std::vector<Mat2> frontier{{1, 0, 0, 1}};
  dist.emplace(frontier.front(), 0);
  for (int d = 1; d <= radius; ++d) {
    std::vector<Mat2> next;
    for (const auto& m : frontier)
      for (int which = 0; which < 2; ++which)
        for (int e : {1, -1}) {
          const Mat2 r = step(m, which, e);
          if (dist.emplace(r, d).second) next.push_back(r);
        }
    frontier = std::move(next);
  }
  return {dist.begin(), dist.end()};
}

std::optional<int> sl2_tuple_reduction_distance(std::int64_t a, std::int64_t b, int max_steps) {
  using State = std::array<std::int64_t, 2>;
  auto done = [](const State& s) {
    return (std::abs(s[0]) == 1 && s[1] == 0) || (s[0] == 0 && std::abs(s[1]) == 1);
  };
  std::set<State> seen;
  std::vector<State> frontier{{a, b}};
  seen.insert(frontier.front());
  for (int d = 0; d <= max_steps; ++d) {
    for (const auto& s : frontier)
      if (done(s)) return d;
    if (d == max_steps) break;
    std::vector<State> next;
    for (const auto& s : frontier)
      for (int e : {1, -1}) {
        const State x{checked_add(s[0], e * s[1]), s[1]};
        const State y{s[0], checked_add(s[1], e * s[0])};
        for (const auto& t : {x, y})
          if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace cayley
