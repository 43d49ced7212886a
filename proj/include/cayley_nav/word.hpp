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

#ifndef CAYLEY_NAV_WORD_HPP
#define CAYLEY_NAV_WORD_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace cayley {

enum class Alphabet { Elementary, AB };
enum class Symbol { A, B };

// One generator symbol with exponent +1 or -1. Elementary letters carry
// 1-based indices (i, j), i != j, standing for the matrix e_ij; AB letters
// stand for the two generators A_N, B_N.
struct Letter {
  Alphabet alphabet = Alphabet::Elementary;
  int i = 0;
  int j = 0;
  Symbol symbol = Symbol::A;
  int exponent = 1;

  static Letter elementary(int i, int j, int exponent = 1);
  static Letter ab(Symbol symbol, int exponent = 1);

  Letter inverse() const noexcept;
  bool is_inverse_of(const Letter& other) const noexcept;

  bool operator==(const Letter&) const = default;
};

// A finite product of letters over SL_N. The leftmost letter is the leftmost
// matrix factor.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  explicit Word(int dimension);
  Word(int dimension, std::vector<Letter> letters);

  int dimension() const noexcept { return n_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }

  void push_back(const Letter& letter);
  // Appends `count` copies of the letter.
  void push_power(const Letter& letter, std::size_t count);
  void append(const Word& other);

  // Reversed, each exponent negated.
  Word inverse() const;

  // Cancels adjacent inverse pairs until none remain.
  Word& free_reduce();
  Word freely_reduced() const;

  // nullopt for the empty word; throws DomainError when alphabets are mixed.
  std::optional<Alphabet> alphabet() const;

  bool operator==(const Word&) const = default;

 private:
  void check(const Letter& letter) const;

  int n_;
  std::vector<Letter> letters_;
};

// Concatenation.
Word operator*(Word lhs, const Word& rhs);

}  // namespace cayley

#endif  // CAYLEY_NAV_WORD_HPP
