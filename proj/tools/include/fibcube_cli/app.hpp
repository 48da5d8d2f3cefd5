// Copyright 2026 The fibcube Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIBCUBE_CLI_APP_HPP
#define FIBCUBE_CLI_APP_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fibcube::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDiscrepancy = 2,
  kCapExceeded = 3,
};

/// Environment lookup; returns std::nullopt for unset variables.
using Environment = std::function<std::optional<std::string>(const std::string&)>;

Environment process_environment();

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Environment& env = process_environment());

}  // namespace fibcube::cli

#endif  // FIBCUBE_CLI_APP_HPP
