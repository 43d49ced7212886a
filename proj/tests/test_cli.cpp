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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cayley_nav/cli.hpp"
#include "cayley_nav/io.hpp"
#include "cayley_nav/matrix.hpp"
#include "support.hpp"

using namespace cayley;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cayley_nav_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gcd prints the worked trace") {
  const Run r = run({"gcd", "-32", "8", "-12", "--trace"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("gcd 4") != std::string::npos);
  CHECK(r.out.find("subtractive steps 6") != std::string::npos);
  CHECK(r.out.find("(0, 0, -4)") != std::string::npos);
  CHECK(r.out.find("(-20, 8, -12)") != std::string::npos);
}

TEST_CASE("compress output verifies") {
  const Run r = run({"compress", "--n", "3", "--i", "1", "--j", "3", "--m", "100"});
  REQUIRE(r.code == kExitOk);
  const std::string word = temp_file("w100.txt", first_line(r.out));
  const std::string mat =
      temp_file("m100.txt", format_matrix(cayley::testing::elementary_power(3, 1, 3, 100)));
  CHECK(run({"verify", "--word", word, "--matrix", mat}).code == kExitOk);
  const std::string wrong =
      temp_file("m101.txt", format_matrix(cayley::testing::elementary_power(3, 1, 3, 101)));
  const Run bad = run({"verify", "--word", word, "--matrix", wrong});
  CHECK(bad.code == kExitMismatch);
  CHECK(bad.out.find("mismatch") != std::string::npos);
}

TEST_CASE("verify compares mod p when the header has a modulus") {
  const std::string word = temp_file("wp.txt", "e(1,2) e(1,2) e(1,2) e(1,2) e(1,2)");
  const std::string mat = temp_file("mp.txt", "3 5\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(run({"verify", "--word", word, "--matrix", mat}).code == kExitOk);
  const std::string matz = temp_file("mz.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(run({"verify", "--word", word, "--matrix", matz}).code == kExitMismatch);
}

TEST_CASE("normal-form and reduce-modp emit checkable words") {
  const std::string mat = temp_file("nf.txt", "3\n2 1 0\n1 1 0\n0 0 1\n");
  const Run nf = run({"normal-form", mat});
  REQUIRE(nf.code == kExitOk);
  const std::string w = temp_file("nfw.txt", first_line(nf.out));
  CHECK(run({"verify", "--word", w, "--matrix", mat}).code == kExitOk);

  const Run rp = run({"reduce-modp", "--p", "7", mat});
  REQUIRE(rp.code == kExitOk);
  const std::string wp = temp_file("rpw.txt", first_line(rp.out));
  const std::string matp = temp_file("nfp.txt", "3 7\n2 1 0\n1 1 0\n0 0 1\n");
  CHECK(run({"verify", "--word", wp, "--matrix", matp}).code == kExitOk);

  const Run js = run({"--json", "normal-form", "--stats", mat});
  REQUIRE(js.code == kExitOk);
  const auto row = nlohmann::json::parse(first_line(js.out));
  CHECK(row["command"] == "normal-form");
  CHECK(row["N"] == 3);
  for (const char* key : {"input", "length", "bound", "ratio", "runtime_ms"}) CHECK(row.contains(key));
}

TEST_CASE("JSON rows echo the configured constants") {
  const std::string cfg = temp_file("cfg.json", R"({"K": 17, "C": 3.5, "C3": 2})");
  const Run r = run({"--json", "--config", cfg, "gcd", "12", "18", "30"});
  REQUIRE(r.code == kExitOk);
  const auto row = nlohmann::json::parse(first_line(r.out));
  CHECK(row["gcd"] == "6");
  CHECK(row["constants"]["K"] == 17.0);
  CHECK(row["constants"]["C"] == 3.5);
  const Run k = run({"--json", "--K", "5", "gcd", "12", "18", "30"});
  CHECK(nlohmann::json::parse(first_line(k.out))["constants"]["K"] == 5.0);
}

TEST_CASE("other subcommands run") {
  CHECK(run({"zeckendorf", "100"}).out.find("3 + 8 + 89 = 100") != std::string::npos);
  CHECK(run({"ab-table", "--n", "4"}).code == kExitOk);
  const Run bfs = run({"bfs-diameter", "--n", "3", "--p", "2"});
  CHECK(bfs.out.find("diameter 6") != std::string::npos);
  const Run sl2 = run({"--json", "sl2-lowerbound", "--radius", "5"});
  CHECK(sl2.code == kExitOk);
  const Run rep = run({"fp-report", "--n", "3", "--p", "2", "--exhaustive", "--csv"});
  CHECK(rep.code == kExitOk);
  CHECK(rep.out.rfind("N,p,max_len,bound,diameter", 0) == 0);
  const std::string w = temp_file("ab.txt", "e(1,3) e(2,1)^-1");
  CHECK(run({"rewrite-ab", "--n", "3", w}).code == kExitOk);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"zeckendorf", "abc"}).code == kExitParse);
  CHECK(run({"zeckendorf", "0"}).code == kExitDomain);
  CHECK(run({"compress", "--n", "2", "--i", "1", "--j", "2", "--m", "5"}).code == kExitDomain);
  CHECK(run({"compress", "--n", "3", "--i", "1", "--j", "3", "--m", "5", "--mod", "6"}).code ==
        kExitDomain);
  const std::string singular = temp_file("sing.txt", "3\n2 0 0\n0 1 0\n0 0 1\n");
  CHECK(run({"normal-form", singular}).code == kExitDomain);
  CHECK(run({"bfs-diameter", "--n", "4", "--p", "3"}).code == kExitBudget);
  CHECK(run({"--budget", "100", "bfs-diameter", "--n", "3", "--p", "2"}).code == kExitBudget);
  CHECK(run({"--help"}).code == kExitOk);
}
