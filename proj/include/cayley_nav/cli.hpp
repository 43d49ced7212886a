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

#ifndef CAYLEY_NAV_CLI_HPP
#define CAYLEY_NAV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cayley {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitBudget = 4,
};

// Runs `cayley-nav` with the given arguments (program name excluded).
// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley

#endif  // CAYLEY_NAV_CLI_HPP
