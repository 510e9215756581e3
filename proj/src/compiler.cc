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

#include "nsra/compiler.h"

#include "nsra/parser.h"
#include "nsra/semantics.h"

namespace nsra {

Compilation compile(std::string_view text, const Registry& reg,
                    const RenderOptions& opts) {
  Compilation c;
  QueryAst ast = parse_text(text);
  c.ir = lower(ast, reg, &c.warnings);
  c.ql = render(c.ir, opts);
  return c;
}

std::string compile_to_ql(std::string_view text) {
  static const Registry kBuiltin = builtin_crypto_profile();
  return compile(text, kBuiltin).ql;
}

}  // namespace nsra
