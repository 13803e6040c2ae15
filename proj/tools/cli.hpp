// Copyright 2026 The equidim Authors
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

#ifndef EQUIDIM_TOOLS_CLI_HPP_
#define EQUIDIM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace equidim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;          // bad input, precondition, budget
inline constexpr int kSuiteFailures = 2;  // verify found counterexamples

// args excludes the program name. Graph path "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace equidim::cli

#endif  // EQUIDIM_TOOLS_CLI_HPP_
