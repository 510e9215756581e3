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

#ifndef NSRA_COMPILER_H_
#define NSRA_COMPILER_H_

#include <string>
#include <string_view>
#include <vector>

#include "nsra/error.h"
#include "nsra/ir.h"
#include "nsra/qlgen.h"
#include "nsra/registry.h"

namespace nsra {

struct Compilation {
  QueryIR ir;
  std::string ql;
  std::vector<Warning> warnings;
};

// tokenize -> normalize -> parse -> lower -> render. Throws Error.
Compilation compile(std::string_view text, const Registry& reg,
                    const RenderOptions& opts = {});

// compile(...).ql with the builtin profile.
std::string compile_to_ql(std::string_view text);

}  // namespace nsra

#endif  // NSRA_COMPILER_H_
