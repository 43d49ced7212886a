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

#include "cayley_nav/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley_nav/ab_rewrite.hpp"
#include "cayley_nav/bfs.hpp"
#include "cayley_nav/compress.hpp"
#include "cayley_nav/errors.hpp"
#include "cayley_nav/euclid.hpp"
#include "cayley_nav/fibonacci.hpp"
#include "cayley_nav/io.hpp"
#include "cayley_nav/modp_reduction.hpp"
#include "cayley_nav/normal_form.hpp"

namespace cayley {

namespace {

using nlohmann::json;

// Default for C3 in the normal-form cap C2 = C3 N^N.
constexpr double kDefaultNormalFormConstant = 10.0;
// Steps the deterministic engine may take inside `gcd` before giving up.
constexpr std::size_t kCliSubtractiveLimit = 10'000'000;

struct Config {
  double euclid_k = kDefaultEuclidConstant;
  double diameter_c = kDefaultDiameterConstant;
  double normal_form_c3 = kDefaultNormalFormConstant;
  std::string config_file;
  bool json_output = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBfsBudget;

  void load_file() {
    if (config_file.empty()) return;
    std::ifstream f(config_file);
    if (!f) throw ParseError("cannot open config file " + config_file);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad config file: ") + e.what());
    }
    euclid_k = j.value("K", euclid_k);
    diameter_c = j.value("C", diameter_c);
    normal_form_c3 = j.value("C3", normal_form_c3);
  }

  json constants() const { return {{"K", euclid_k}, {"C", diameter_c}, {"C3", normal_form_c3}}; }
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json report_row(const Config& cfg, const std::string& command, int n, std::optional<std::int64_t> p,
                const std::string& input, std::size_t length, double bound, double runtime_ms) {
  json row = {{"command", command},
              {"N", n},
              {"input", input},
              {"length", length},
              {"bound", bound},
              {"ratio", bound > 0 ? static_cast<double>(length) / bound : 0.0},
              {"runtime_ms", runtime_ms},
              {"constants", cfg.constants()}};
  if (p) row["p"] = *p;
  return row;
}

BigInt parse_bigint(const std::string& s) {
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw ParseError("not an integer: '" + s + "'");
  }
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

std::string trim_leading(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos == std::string::npos ? std::string() : s.substr(pos);
}

std::vector<MatrixRecord> read_matrices(const std::string& path) {
  const std::string text = read_input(path);
  const std::string t = trim_leading(text);
  if (!t.empty() && (t[0] == '{' || t[0] == '[')) {
    std::vector<MatrixRecord> out;
    try {
      const json j = json::parse(t);
      if (j.is_array()) {
        for (const auto& m : j) out.push_back(matrix_from_json(m));
      } else {
        out.push_back(matrix_from_json(j));
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    return out;
  }
  std::istringstream in(text);
  auto out = parse_matrices(in);
  if (out.empty()) throw ParseError("no matrix found in " + path);
  return out;
}

Word read_word(const std::string& path, int n) {
  const std::string t = trim_leading(read_input(path));
  if (!t.empty() && t[0] == '{') {
    try {
      Word w = word_from_json(json::parse(t));
      if (w.dimension() != n) throw ParseError("word dimension differs from the expected N");
      return w;
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad word JSON: ") + e.what());
    }
  }
  return parse_word(t, n);
}

std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? ", " : "") + t[k].get_str();
  return s + ")";
}

double log_norm_floor2(const MatZ& m) {
  const BigInt norm = sup_norm(m);
  return norm < 2 ? std::log(2.0) : log_abs(norm);
}

// ------------------------------------------------------------ subcommands

void add_compress(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("compress", "Short word for e_ij^m");
  auto n = std::make_shared<int>(3);
  auto i = std::make_shared<int>(1);
  auto j = std::make_shared<int>(3);
  auto m = std::make_shared<std::string>();
  auto mod = std::make_shared<std::int64_t>(0);
  sub->add_option("--n", *n, "Dimension N >= 3")->required();
  sub->add_option("--i", *i, "Row index")->required();
  sub->add_option("--j", *j, "Column index")->required();
  sub->add_option("--m", *m, "Exponent (arbitrary size)")->required();
  sub->add_option("--mod", *mod, "Work in SL_N(F_p) for this prime");
  sub->callback([&, n, i, j, m, mod] {
    action = [&, n, i, j, m, mod] {
      Stopwatch sw;
      BigInt e = parse_bigint(*m);
      std::optional<std::int64_t> p;
      Word w(*n);
      if (*mod != 0) {
        p = *mod;
        w = compress_power_modp(*n, *i, *j, residue(e, *mod), *mod);
        e = BigInt(static_cast<long>(balanced_residue(residue(e, *mod), *mod)));
      } else {
        w = compress_power(*n, *i, *j, e);
      }
      const double bound = zeckendorf_length_bound(e);
      const std::string input = "e(" + std::to_string(*i) + "," + std::to_string(*j) + ")^" + *m;
      if (cfg.json_output) {
        json row = report_row(cfg, "compress", *n, p, input, w.length(), bound, sw.ms());
        row["word"] = format_word(w);
        out << row.dump() << '\n';
      } else {
        out << format_word(w) << '\n' << "length " << w.length() << '\n' << "bound " << bound << '\n';
      }
    };
  });
}

void add_zeckendorf(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("zeckendorf", "Zeckendorf decomposition of m");
  auto m = std::make_shared<std::string>();
  sub->add_option("m", *m, "Positive integer")->required();
  sub->callback([&, m] {
    action = [&, m] {
      const ZeckendorfDecomposition z = zeckendorf(parse_bigint(*m));
      std::vector<std::string> summands;
      for (auto k : z.indices) summands.push_back(fib(k).get_str());
      if (cfg.json_output) {
        out << json{{"command", "zeckendorf"}, {"m", z.m.get_str()}, {"indices", z.indices},
                    {"summands", summands}}
                   .dump()
            << '\n';
        return;
      }
      out << "indices";
      for (auto k : z.indices) out << ' ' << k;
      out << "\nsummands ";
      for (std::size_t k = 0; k < summands.size(); ++k) out << (k ? " + " : "") << summands[k];
      out << " = " << z.m.get_str() << '\n';
    };
  });
}

void add_gcd(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("gcd", "Greatest common divisor by subtractive Euclid");
  auto values = std::make_shared<std::vector<std::string>>();
  auto trace = std::make_shared<bool>(false);
  auto accel = std::make_shared<bool>(false);
  sub->add_option("values", *values, "Tuple entries")->required();
  sub->add_flag("--trace", *trace, "Print the deterministic trace");
  sub->add_flag("--accelerated", *accel, "Print the accelerated word");
  sub->callback([&, values, trace, accel] {
    action = [&, values, trace, accel] {
      Stopwatch sw;
      Tuple t;
      for (const auto& v : *values) t.push_back(parse_bigint(v));
      const int n = static_cast<int>(t.size());
      std::optional<GcdResult> det;
      try {
        det = subtractive_gcd(t, kCliSubtractiveLimit);
      } catch (const BudgetError&) {
      }
      std::optional<AcceleratedResult> acc;
      if (n >= 3) acc = accelerated_reduce(t, n);
      BigInt g;
      if (det) {
        g = det->gcd;
      } else if (acc) {
        g = abs(acc->final[acc->survivor - 1]);
      } else {
        mpz_gcd(g.get_mpz_t(), t[0].get_mpz_t(), t[1 % n].get_mpz_t());
        for (const auto& x : t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
      BigInt max_abs = 0;
      for (const auto& x : t)
        if (abs(x) > max_abs) max_abs = abs(x);
      const double bound = n >= 3 ? accelerated_step_bound(n, max_abs, cfg.euclid_k) : 0.0;

      if (cfg.json_output) {
        json row = report_row(cfg, "gcd", n, std::nullopt, tuple_str(t),
                              acc ? acc->elementary_step_count() : 0, bound, sw.ms());
        row["gcd"] = g.get_str();
        row["subtractive_steps"] = det ? json(det->trace.step_count()) : json(nullptr);
        row["accelerated_steps"] = acc ? json(acc->elementary_step_count()) : json(nullptr);
        if (*trace && det) {
          json steps = json::array();
          for (const auto& s : det->trace.steps) steps.push_back({s.target, s.source, s.sign});
          row["trace"] = steps;
        }
        if (*accel && acc) row["word"] = format_word(acc->word);
        out << row.dump() << '\n';
        return;
      }
      out << "gcd " << g.get_str() << '\n';
      if (det) out << "subtractive steps " << det->trace.step_count() << '\n';
      else out << "subtractive steps > " << kCliSubtractiveLimit << '\n';
      if (acc) {
        out << "accelerated steps " << acc->elementary_step_count() << " (bound " << bound << ")\n";
      } else {
        out << "accelerated steps n/a (needs N >= 3)\n";
      }
      if (*trace && det) {
        Tuple cur = det->trace.initial;
        out << tuple_str(cur) << '\n';
        for (const auto& s : det->trace.steps) {
          if (s.sign > 0) cur[s.target - 1] += cur[s.source - 1];
          else cur[s.target - 1] -= cur[s.source - 1];
          out << "  a" << s.target << (s.sign > 0 ? " += a" : " -= a") << s.source << "  -> "
              << tuple_str(cur) << '\n';
        }
      }
      if (*accel && acc) out << format_word(acc->word) << '\n';
    };
  });
}

void add_normal_form(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("normal-form", "Word for a matrix in SL_N(Z)");
  auto path = std::make_shared<std::string>("-");
  auto stats = std::make_shared<bool>(false);
  sub->add_option("file", *path, "Matrix file, '-' for stdin");
  sub->add_flag("--stats", *stats, "Batch mode: one table row per matrix");
  sub->callback([&, path, stats] {
    action = [&, path, stats] {
      const auto records = read_matrices(*path);
      if (*stats && !cfg.json_output) {
        out << "#  N  log_norm  length  ratio  triangularize  sign_fix  upper_clear\n";
      }
      std::size_t index = 0;
      for (const auto& rec : records) {
        Stopwatch sw;
        const NormalFormResult nf = normal_form_detailed(rec.matrix);
        const int n = rec.matrix.dimension();
        const double lognorm = log_norm_floor2(rec.matrix);
        const double cap = cfg.normal_form_c3 * std::pow(static_cast<double>(n), n) * lognorm;
        const double ratio = static_cast<double>(nf.word.length()) / lognorm;
        if (cfg.json_output) {
          json row = report_row(cfg, "normal-form", n, std::nullopt,
                                *path + "#" + std::to_string(index), nf.word.length(), cap, sw.ms());
          row["log_norm"] = lognorm;
          row["length_per_log_norm"] = ratio;
          row["phases"] = {nf.triangularize_length, nf.sign_fix_length, nf.upper_clear_length};
          if (!*stats) row["word"] = format_word(nf.word);
          out << row.dump() << '\n';
        } else if (*stats) {
          out << index << "  " << n << "  " << lognorm << "  " << nf.word.length() << "  " << ratio
              << "  " << nf.triangularize_length << "  " << nf.sign_fix_length << "  "
              << nf.upper_clear_length << '\n';
        } else {
          out << format_word(nf.word) << '\n'
              << "length " << nf.word.length() << '\n'
              << "log_norm " << lognorm << '\n'
              << "ratio " << ratio << '\n';
        }
        ++index;
      }
    };
  });
}

void add_reduce_modp(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("reduce-modp", "Word for a matrix in SL_N(F_p)");
  auto path = std::make_shared<std::string>("-");
  auto p = std::make_shared<std::int64_t>(0);
  sub->add_option("--p", *p, "Prime modulus (defaults to the matrix header)");
  sub->add_option("file", *path, "Matrix file, '-' for stdin");
  sub->callback([&, path, p] {
    action = [&, path, p] {
      for (const auto& rec0 : read_matrices(*path)) {
        Stopwatch sw;
        MatrixRecord rec = rec0;
        if (*p != 0) {
          if (rec.modulus && *rec.modulus != *p) throw DomainError("--p differs from the matrix header");
          rec.modulus = *p;
        }
        const MatFp m = rec.to_fp();
        const Word w = word_for_modp(m);
        const int n = m.dimension();
        const double bound = cfg.diameter_c * n * n * std::log(static_cast<double>(m.modulus()));
        if (cfg.json_output) {
          json row = report_row(cfg, "reduce-modp", n, m.modulus(), *path, w.length(), bound, sw.ms());
          row["word"] = format_word(w);
          out << row.dump() << '\n';
        } else {
          out << format_word(w) << '\n' << "length " << w.length() << '\n' << "bound " << bound << '\n';
        }
      }
    };
  });
}

void add_fp_report(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("fp-report", "Word lengths in SL_N(F_p) against C N^2 ln p");
  auto n = std::make_shared<int>(3);
  auto p = std::make_shared<std::int64_t>(2);
  auto exhaustive = std::make_shared<bool>(false);
  auto samples = std::make_shared<std::size_t>(100);
  auto csv = std::make_shared<bool>(false);
  sub->add_option("--n", *n, "Dimension")->required();
  sub->add_option("--p", *p, "Prime")->required();
  sub->add_flag("--exhaustive", *exhaustive, "Every group element, plus the BFS diameter");
  sub->add_option("--samples", *samples, "Number of random elements");
  sub->add_flag("--csv", *csv, "CSV row instead of text");
  sub->callback([&, n, p, exhaustive, samples, csv] {
    action = [&, n, p, exhaustive, samples, csv] {
      Stopwatch sw;
      const ModpReport r = diameter_upper_bound_report(*n, *p, *exhaustive, *samples, cfg.seed,
                                                       cfg.diameter_c, cfg.budget);
      const std::string diam = r.diameter ? std::to_string(*r.diameter) : "";
      if (cfg.json_output) {
        json row = report_row(cfg, "fp-report", r.n, r.p, *exhaustive ? "exhaustive" : "samples",
                              r.max_length, r.bound, sw.ms());
        row["max_len"] = r.max_length;
        row["mean_len"] = r.mean_length;
        row["elements"] = r.elements;
        row["fitted_C"] = r.fitted_constant;
        row["verified"] = r.all_verified;
        row["diameter"] = r.diameter ? json(*r.diameter) : json(nullptr);
        out << row.dump() << '\n';
      } else if (*csv) {
        out << "N,p,max_len,bound,diameter\n"
            << r.n << ',' << r.p << ',' << r.max_length << ',' << r.bound << ',' << diam << '\n';
      } else {
        out << "N " << r.n << "  p " << r.p << "  elements " << r.elements << '\n'
            << "max_len " << r.max_length << "  mean_len " << r.mean_length << '\n'
            << "bound " << r.bound << "  fitted_C " << r.fitted_constant << '\n';
        if (r.diameter) out << "diameter " << *r.diameter << '\n';
        out << "verified " << (r.all_verified ? "yes" : "no") << '\n';
      }
      if (!r.all_verified) throw InternalStateError("a produced word failed verification");
    };
  });
}

void add_rewrite_ab(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("rewrite-ab", "Rewrite an elementary word over {A, B}");
  auto path = std::make_shared<std::string>("-");
  auto n = std::make_shared<int>(3);
  sub->add_option("file", *path, "Word file, '-' for stdin");
  sub->add_option("--n", *n, "Dimension")->required();
  sub->callback([&, path, n] {
    action = [&, path, n] {
      Stopwatch sw;
      const Word w = read_word(*path, *n);
      const Word ab = rewrite_word_ab(w);
      const double bound = 10.0 * *n * static_cast<double>(w.length());
      if (cfg.json_output) {
        json row = report_row(cfg, "rewrite-ab", *n, std::nullopt, *path, ab.length(), bound, sw.ms());
        row["word"] = format_word(ab);
        out << row.dump() << '\n';
      } else {
        out << format_word(ab) << '\n' << "length " << ab.length() << '\n';
      }
    };
  });
}

void add_ab_table(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("ab-table", "Every e_ij as a word in A, B");
  auto n = std::make_shared<int>(3);
  sub->add_option("--n", *n, "Dimension")->required();
  sub->callback([&, n] {
    action = [&, n] {
      const AbTable table(*n);
      for (int i = 1; i <= *n; ++i)
        for (int j = 1; j <= *n; ++j) {
          if (i == j) continue;
          const Word& w = table.word(i, j);
          if (cfg.json_output) {
            out << json{{"command", "ab-table"}, {"N", *n}, {"i", i}, {"j", j},
                        {"length", w.length()}, {"bound", 10 * *n}, {"word", format_word(w)}}
                       .dump()
                << '\n';
          } else {
            out << "e(" << i << "," << j << ")  " << w.length() << "  " << format_word(w) << '\n';
          }
        }
    };
  });
}

void add_bfs_diameter(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("bfs-diameter", "Exact Cayley graph diameter of SL_N(F_p)");
  auto n = std::make_shared<int>(3);
  auto p = std::make_shared<std::int64_t>(2);
  auto gens = std::make_shared<std::string>("elementary");
  sub->add_option("--n", *n, "Dimension")->required();
  sub->add_option("--p", *p, "Prime")->required();
  sub->add_option("--gens", *gens, "elementary or ab")->check(CLI::IsMember({"elementary", "ab"}));
  sub->callback([&, n, p, gens] {
    action = [&, n, p, gens] {
      Stopwatch sw;
      require_prime(*p);
      const auto set = *gens == "ab" ? GeneratorSet::AB : GeneratorSet::Elementary;
      const DiameterResult d = bfs_diameter(*n, *p, set, cfg.budget);
      std::uint64_t total = 0;
      for (auto h : d.histogram) total += h;
      if (cfg.json_output) {
        out << json{{"command", "bfs-diameter"}, {"N", *n}, {"p", *p}, {"gens", *gens},
                    {"diameter", d.diameter}, {"histogram", d.histogram}, {"order", total},
                    {"runtime_ms", sw.ms()}}
                   .dump()
            << '\n';
        return;
      }
      out << "order " << total << '\n' << "diameter " << d.diameter << '\n' << "histogram";
      for (auto h : d.histogram) out << ' ' << h;
      out << '\n';
    };
  });
}

void add_sl2_lowerbound(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action) {
  auto* sub = app.add_subcommand("sl2-lowerbound", "Distances of e21^n in SL_2(Z)");
  auto radius = std::make_shared<int>(12);
  sub->add_option("--radius", *radius, "Ball radius");
  sub->callback([&, radius] {
    action = [&, radius] {
      const auto ball = bfs_ball_sl2z(*radius);
      if (!cfg.json_output) out << "n  distance(e21^n)\n";
      for (int k = 0; k <= *radius; ++k) {
        const auto it = ball.find(Mat2{1, 0, k, 1});
        const int d = it == ball.end() ? -1 : it->second;
        if (cfg.json_output) {
          out << json{{"command", "sl2-lowerbound"}, {"n", k}, {"distance", d}}.dump() << '\n';
        } else {
          out << k << "  " << d << '\n';
        }
      }
    };
  });
}

void add_verify(CLI::App& app, Config& cfg, std::ostream& out, std::function<void()>& action,
                int& exit_code) {
  auto* sub = app.add_subcommand("verify", "Check that a word evaluates to a matrix");
  auto word_path = std::make_shared<std::string>();
  auto matrix_path = std::make_shared<std::string>();
  sub->add_option("--word", *word_path, "Word file")->required();
  sub->add_option("--matrix", *matrix_path, "Matrix file (with 'N p' header for mod p)")->required();
  sub->callback([&, word_path, matrix_path] {
    action = [&, word_path, matrix_path] {
      const auto records = read_matrices(*matrix_path);
      if (records.size() != 1) throw ParseError("verify expects exactly one matrix");
      const MatrixRecord& rec = records.front();
      const Word w = read_word(*word_path, rec.matrix.dimension());
      bool ok;
      if (rec.modulus) ok = eval_word_fp(w, *rec.modulus) == rec.to_fp();
      else ok = eval_word_z(w) == rec.matrix;
      if (cfg.json_output) {
        out << json{{"command", "verify"}, {"N", rec.matrix.dimension()}, {"length", w.length()},
                    {"match", ok}}
                   .dump()
            << '\n';
      } else {
        out << (ok ? "match" : "mismatch") << '\n';
      }
      exit_code = ok ? kExitOk : kExitMismatch;
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Short words for elements of SL_N(Z) and SL_N(F_p)", "cayley-nav"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json_output, "JSON lines output");
  app.add_option("--seed", cfg.seed, "Seed for random sampling");
  app.add_option("--K", cfg.euclid_k, "Constant K of the Euclid step bound");
  app.add_option("--C", cfg.diameter_c, "Constant C of the C N^2 ln p bound");
  app.add_option("--C3", cfg.normal_form_c3, "Constant C3 of the normal-form cap C3 N^N ln|M|");
  app.add_option("--config", cfg.config_file, "JSON file with K, C, C3");
  app.add_option("--budget", cfg.budget, "Largest group order explored by BFS");

  std::function<void()> action;
  int exit_code = kExitOk;
  add_compress(app, cfg, out, action);
  add_zeckendorf(app, cfg, out, action);
  add_gcd(app, cfg, out, action);
  add_normal_form(app, cfg, out, action);
  add_reduce_modp(app, cfg, out, action);
  add_fp_report(app, cfg, out, action);
  add_rewrite_ab(app, cfg, out, action);
  add_ab_table(app, cfg, out, action);
  add_bfs_diameter(app, cfg, out, action);
  add_sl2_lowerbound(app, cfg, out, action);
  add_verify(app, cfg, out, action, exit_code);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    cfg.load_file();
    if (action) action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return exit_code;
}

}  // namespace cayley
