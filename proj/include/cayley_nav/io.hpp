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

#ifndef CAYLEY_NAV_IO_HPP
#define CAYLEY_NAV_IO_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cayley_nav/matrix.hpp"
#include "cayley_nav/word.hpp"

namespace cayley {

// A matrix as read from text or JSON: integer rows plus an optional modulus.
struct MatrixRecord {
  MatZ matrix;
  std::optional<std::int64_t> modulus;

  // Residues mod `modulus`; throws DomainError when there is none.
  MatFp to_fp() const;
};

// Text format: a header line "N" or "N p", then N lines of N integers.
// parse_matrices reads any number of such blocks. Throws ParseError.
MatrixRecord parse_matrix(std::string_view text);
std::vector<MatrixRecord> parse_matrices(std::istream& in);
std::string format_matrix(const MatZ& m);
std::string format_matrix(const MatFp& m);

// Whitespace-separated tokens e(i,j), e(i,j)^-1, A, A^-1, B, B^-1.
Word parse_word(std::string_view text, int n);
std::string format_word(const Word& w);

// JSON mirrors: {"n", "p"?, "rows"} and {"n", "alphabet", "letters"} with
// letters {"i","j","e"} or {"sym","e"}. Entries that do not fit in 64 bits are
// written as decimal strings; both forms are accepted on input.
nlohmann::json matrix_to_json(const MatZ& m);
nlohmann::json matrix_to_json(const MatFp& m);
MatrixRecord matrix_from_json(const nlohmann::json& j);
// Throws DomainError for a word mixing both alphabets.
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// Reads a whole file, or standard input for "-".
std::string read_input(const std::string& path);

}  // namespace cayley

#endif  // CAYLEY_NAV_IO_HPP
