// Copyright 2026 The TPASS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TPASS_TOOLS_CLI_H_
#define TPASS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tpass::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not an equilibrium / not separable
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

// Runs one command line (args excludes the program name) and returns the
// exit code. Reports go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace tpass::cli

#endif  // TPASS_TOOLS_CLI_H_
