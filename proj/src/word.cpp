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

#include "cayley_nav/word.hpp"

#include <algorithm>
#include <string>

#include "cayley_nav/errors.hpp"

namespace cayley {

Letter Letter::elementary(int i, int j, int exponent) {
  if (i == j || i < 1 || j < 1) {
    throw InvalidGeneratorError("invalid elementary generator e(" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  }
  if (exponent != 1 && exponent != -1) {
    throw InvalidGeneratorError("letter exponent must be +1 or -1");
  }
  Letter l;
  l.alphabet = Alphabet::Elementary;
  l.i = i;
  l.j = j;
  l.exponent = exponent;
  return l;
}

Letter Letter::ab(Symbol symbol, int exponent) {
  if (exponent != 1 && exponent != -1) {
    throw InvalidGeneratorError("letter exponent must be +1 or -1");
  }
  Letter l;
  l.alphabet = Alphabet::AB;
  l.symbol = symbol;
  l.exponent = exponent;
  return l;
}

Letter Letter::inverse() const noexcept {
  Letter l = *this;
  l.exponent = -exponent;
  return l;
}

bool Letter::is_inverse_of(const Letter& other) const noexcept {
  return *this == other.inverse();
}

Word::Word(int dimension) : n_(dimension) {
  if (dimension < 1) throw DomainError("word dimension must be positive");
}

Word::Word(int dimension, std::vector<Letter> letters) : Word(dimension) {
  for (const auto& l : letters) check(l);
  letters_ = std::move(letters);
}

void Word::check(const Letter& letter) const {
  if (letter.alphabet == Alphabet::Elementary && (letter.i > n_ || letter.j > n_)) {
    throw InvalidGeneratorError("generator e(" + std::to_string(letter.i) + "," +
                                std::to_string(letter.j) + ") out of range for N=" +
                                std::to_string(n_));
  }
}

void Word::push_back(const Letter& letter) {
  check(letter);
  letters_.push_back(letter);
}

void Word::push_power(const Letter& letter, std::size_t count) {
  check(letter);
  letters_.insert(letters_.end(), count, letter);
}

void Word::append(const Word& other) {
  if (other.n_ != n_) throw DomainError("cannot concatenate words of different dimension");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word Word::inverse() const {
  Word w(n_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word& Word::free_reduce() {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  letters_ = std::move(stack);
  return *this;
}

Word Word::freely_reduced() const {
  Word w = *this;
  w.free_reduce();
  return w;
}

std::optional<Alphabet> Word::alphabet() const {
  if (letters_.empty()) return std::nullopt;
  const Alphabet a = letters_.front().alphabet;
  if (std::any_of(letters_.begin(), letters_.end(),
                  [a](const Letter& l) { return l.alphabet != a; })) {
    throw DomainError("word mixes elementary and A/B letters");
  }
  return a;
}

Word operator*(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

}  // namespace cayley
