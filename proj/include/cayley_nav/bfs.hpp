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

#ifndef CAYLEY_NAV_BFS_HPP
#define CAYLEY_NAV_BFS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cayley_nav/matrix.hpp"

namespace cayley {

enum class GeneratorSet { Elementary, AB };

inline constexpr std::uint64_t kDefaultBfsBudget = 10'000'000;
inline constexpr int kDefaultSl2RadiusLimit = 14;

// |SL_N(F_p)| = p^{N(N-1)/2} prod_{k=2..N} (p^k - 1).
BigInt group_order_sl(int n, std::int64_t p);

// {e_ij} or {A, B} reduced mod p, closed under inverses, duplicates dropped.
std::vector<MatFp> generator_matrices(int n, std::int64_t p, GeneratorSet set);

// Adds the inverse of each generator and drops duplicates.
std::vector<MatFp> symmetrize(const std::vector<MatFp>& gens);

// Distances from the identity in Cay(G, S) for G = <S> <= SL_N(F_p), with
// edges g -- s g. States are packed as base-p integers in row-major order.
class CayleyBfs {
 public:
  // Throws BudgetError when |SL_N(F_p)| exceeds `budget` or when a matrix
  // does not pack into 64 bits.
  CayleyBfs(int n, std::int64_t p, std::vector<MatFp> gens,
            std::uint64_t budget = kDefaultBfsBudget);

  // Explores the whole group.
  void run();
  // Explores until `target` is reached or the group is exhausted.
  std::optional<int> run_until(const MatFp& target);

  int diameter() const noexcept { return static_cast<int>(histogram_.size()) - 1; }
  // histogram()[d] = number of elements at distance d.
  const std::vector<std::uint64_t>& histogram() const noexcept { return histogram_; }
  std::uint64_t size() const noexcept { return dist_.size(); }
  std::optional<int> distance(const MatFp& m) const;

  // Every element reached, in BFS order.
  std::vector<MatFp> elements() const;

  std::uint64_t pack(const MatFp& m) const;
  MatFp unpack(std::uint64_t key) const;

 private:
  bool expand_level();

  int n_;
  std::int64_t p_;
  std::vector<MatFp> gens_;
  std::unordered_map<std::uint64_t, std::uint32_t> dist_;
  std::vector<std::uint64_t> order_;
  std::vector<std::uint64_t> frontier_;
  std::vector<std::uint64_t> histogram_;
};

struct DiameterResult {
  int diameter;
  std::vector<std::uint64_t> histogram;
};

DiameterResult bfs_diameter(int n, std::int64_t p, GeneratorSet set,
                            std::uint64_t budget = kDefaultBfsBudget);
DiameterResult bfs_diameter(int n, std::int64_t p, const std::vector<MatFp>& gens,
                            std::uint64_t budget = kDefaultBfsBudget);

// Word-metric distance of m from the identity. Throws DomainError when m is
// not reached.
int bfs_distance_fp(const MatFp& m, const std::vector<MatFp>& gens,
                    std::uint64_t budget = kDefaultBfsBudget);

// 2x2 integer matrix, row-major.
using Mat2 = std::array<std::int64_t, 4>;

// Exact distances over {e12^{+-1}, e21^{+-1}} in SL_2(Z) for every element
// within `radius` of the identity. Throws BudgetError when radius > limit.
std::map<Mat2, int> bfs_ball_sl2z(int radius, int limit = kDefaultSl2RadiusLimit);

// Fewest steps a <- a +- b, b <- b +- a turning (a, b) into (+-1, 0) or
// (0, +-1); nullopt if more than max_steps are needed.
std::optional<int> sl2_tuple_reduction_distance(std::int64_t a, std::int64_t b, int max_steps);

}  // namespace cayley

#endif  // CAYLEY_NAV_BFS_HPP
