// Copyright 2026 The bcpaths Authors
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


// Subcommands of the bcp tool.

#ifndef BCP_TOOLS__COMMANDS_HPP_
#define BCP_TOOLS__COMMANDS_HPP_

#include <ostream>

namespace bcp::cli
{

/// Exit statuses: 0 success, 1 usage or input error, 2 domain error.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

/// Parses the command line, runs one subcommand and prints its JSON report to
/// `out`. Errors are printed as JSON to `out` and as text to `err`.
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace bcp::cli

#endif  // BCP_TOOLS__COMMANDS_HPP_
