// Copyright 2026 The conflictfair Authors
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

#ifndef CONFLICTFAIR_CLI_H_
#define CONFLICTFAIR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace conflictfair {

// Exit codes of the conflictfair tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCertificateFalse = 1,
  kExitInvalidParams = 2,
  kExitParseError = 3,
  kExitNoAlgorithm = 4,
  kExitBudgetExceeded = 5,
  kExitBaseAdmitsEf1 = 6,
};

// Runs `conflictfair <args...>` (args excludes the program name). Reports go
// to `out` as key:value lines, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_CLI_H_
