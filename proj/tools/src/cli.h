// Copyright 2026 The eznet Authors.
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


#ifndef EZNET_TOOLS_CLI_H_
#define EZNET_TOOLS_CLI_H_

#include <ostream>
#include <string>

namespace eznet::cli {

// Exit codes of Run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs `eznet stats|test|neighborhoods|simulate|gen`. Records go to `out`
// unless --out names a file; diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// 17 significant digits, or "NA" when x is not finite.
std::string FormatNumber(double x);

// Quotes a CSV field when it holds a comma, quote or line break.
std::string CsvField(const std::string& s);

}  // namespace eznet::cli

#endif  // EZNET_TOOLS_CLI_H_
