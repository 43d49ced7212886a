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

#include "cayley_nav/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "cayley_nav/errors.hpp"

namespace cayley {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  return {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
}

BigInt parse_int(const std::string& tok) {
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos) {
    throw ParseError("not an integer: '" + tok + "'");
  }
  return BigInt(tok[0] == '+' ? tok.substr(1) : tok);
}

int parse_small(const std::string& tok) {
  const BigInt v = parse_int(tok);
  if (!v.fits_sint_p()) throw ParseError("integer out of range: '" + tok + "'");
  return static_cast<int>(v.get_si());
}

// Next non-blank, non-comment line.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::optional<MatrixRecord> read_block(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) return std::nullopt;
  const auto header = split_ws(line);
  if (header.empty() || header.size() > 2) throw ParseError("matrix header must be 'N' or 'N p'");
  const int n = parse_small(header[0]);
  if (n < 1) throw ParseError("matrix dimension must be positive");
  std::optional<std::int64_t> p;
  if (header.size() == 2) {
    const BigInt pv = parse_int(header[1]);
    if (!pv.fits_slong_p()) throw ParseError("modulus out of range");
    p = pv.get_si();
  }
  std::vector<std::vector<BigInt>> rows;
  for (int r = 0; r < n; ++r) {
    if (!next_line(in, line)) throw ParseError("matrix ends after " + std::to_string(r) + " rows");
    const auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n));
    }
    std::vector<BigInt> row;
    for (const auto& t : toks) row.push_back(parse_int(t));
    rows.push_back(std::move(row));
  }
  return MatrixRecord{MatZ::from_rows(rows), p};
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ParseError("matrix entry must be an integer or a decimal string");
}

}  // namespace

MatFp MatrixRecord::to_fp() const {
  if (!modulus) throw DomainError("matrix has no modulus");
  require_prime(*modulus);
  return MatFp::reduce(matrix, *modulus);
}

MatrixRecord parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto rec = read_block(in);
  if (!rec) throw ParseError("no matrix found");
  std::string rest;
  if (next_line(in, rest)) throw ParseError("trailing data after matrix");
  return std::move(*rec);
}

std::vector<MatrixRecord> parse_matrices(std::istream& in) {
  std::vector<MatrixRecord> out;
  while (auto rec = read_block(in)) out.push_back(std::move(*rec));
  return out;
}

std::string format_matrix(const MatZ& m) {
  const int n = m.dimension();
  std::ostringstream out;
  out << n << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out << (c ? " " : "") << m(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

std::string format_matrix(const MatFp& m) {
  const int n = m.dimension();
  std::ostringstream out;
  out << n << ' ' << m.modulus() << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

Word parse_word(std::string_view text, int n) {
  Word w(n);
  for (const auto& tok : split_ws(std::string(text))) {
    std::string base = tok;
    int e = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string ex = tok.substr(caret + 1);
      if (ex == "-1") e = -1;
      else if (ex != "1") throw ParseError("bad exponent in token '" + tok + "'");
      base = tok.substr(0, caret);
    }
    if (base == "A" || base == "B") {
      w.push_back(Letter::ab(base == "A" ? Symbol::A : Symbol::B, e));
      continue;
    }
    if (base.size() < 6 || base.rfind("e(", 0) != 0 || base.back() != ')') {
      throw ParseError("unrecognized token '" + tok + "'");
    }
    const std::string inner = base.substr(2, base.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("unrecognized token '" + tok + "'");
    try {
      w.push_back(Letter::elementary(parse_small(inner.substr(0, comma)),
                                     parse_small(inner.substr(comma + 1)), e));
    } catch (const InvalidGeneratorError& err) {
      throw ParseError(std::string("bad generator: ") + err.what());
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    if (l.alphabet == Alphabet::AB) {
      out += l.symbol == Symbol::A ? "A" : "B";
    } else {
      out += "e(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    }
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

nlohmann::json matrix_to_json(const MatZ& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dimension(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dimension(); ++c) row.push_back(bigint_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.dimension()}, {"rows", std::move(rows)}};
}

nlohmann::json matrix_to_json(const MatFp& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dimension(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dimension(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"n", m.dimension()}, {"p", m.modulus()}, {"rows", std::move(rows)}};
}

MatrixRecord matrix_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto& rows_j = j.at("rows");
    if (!rows_j.is_array() || static_cast<int>(rows_j.size()) != n) {
      throw ParseError("'rows' must hold n rows");
    }
    std::vector<std::vector<BigInt>> rows;
    for (const auto& rj : rows_j) {
      if (!rj.is_array() || static_cast<int>(rj.size()) != n) throw ParseError("row has wrong length");
      std::vector<BigInt> row;
      for (const auto& v : rj) row.push_back(bigint_from_json(v));
      rows.push_back(std::move(row));
    }
    std::optional<std::int64_t> p;
    if (j.contains("p")) p = j.at("p").get<std::int64_t>();
    return {MatZ::from_rows(rows), p};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
}

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json letters = nlohmann::json::array();
  const std::string alphabet = w.alphabet() == Alphabet::AB ? "ab" : "elementary";
  for (const auto& l : w) {
    if (l.alphabet == Alphabet::AB) {
      letters.push_back({{"sym", l.symbol == Symbol::A ? "A" : "B"}, {"e", l.exponent}});
    } else {
      letters.push_back({{"i", l.i}, {"j", l.j}, {"e", l.exponent}});
    }
  }
  return {{"n", w.dimension()}, {"alphabet", alphabet}, {"letters", std::move(letters)}};
}

Word word_from_json(const nlohmann::json& j) {
  try {
    Word w(j.at("n").get<int>());
    const std::string alphabet = j.value("alphabet", "elementary");
    if (alphabet != "elementary" && alphabet != "ab") throw ParseError("unknown alphabet " + alphabet);
    for (const auto& lj : j.at("letters")) {
      const int e = lj.at("e").get<int>();
      if (lj.contains("sym")) {
        const std::string s = lj.at("sym").get<std::string>();
        if (s != "A" && s != "B") throw ParseError("unknown symbol " + s);
        w.push_back(Letter::ab(s == "A" ? Symbol::A : Symbol::B, e));
      } else {
        w.push_back(Letter::elementary(lj.at("i").get<int>(), lj.at("j").get<int>(), e));
      }
    }
    (void)w.alphabet();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad word JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad word JSON: ") + e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace cayley
