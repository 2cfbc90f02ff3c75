// Copyright 2026 The gmcq Authors
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

#ifndef GMCQ_CLI_HPP
#define GMCQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gmcq::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  ///< a requested check failed or disagreed with a published value
inline constexpr int kUsage = 2;        ///< bad flags or inadmissible parameters
inline constexpr int kBudget = 3;       ///< an oracle search ran out of budget

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmcq::cli

#endif  // GMCQ_CLI_HPP
