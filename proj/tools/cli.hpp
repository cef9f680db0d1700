/* Copyright 2026 The Tokgrade Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TOKGRADE_TOOLS_CLI_HPP
#define TOKGRADE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tokgrade::cli {

enum ExitCode : int {
  kPerfect = 0,
  kUsage = 1,
  kLexError = 2,
  kImperfect = 3,
};

/// Runs the tool with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tokgrade::cli

#endif  // TOKGRADE_TOOLS_CLI_HPP
