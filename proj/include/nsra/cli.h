// Copyright 2026 The nsra Authors.
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

#ifndef NSRA_CLI_H_
#define NSRA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace nsra {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// `args` excludes the program name. Never throws; failures become
// diagnostics on `err` and a nonzero exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nsra

#endif  // NSRA_CLI_H_
