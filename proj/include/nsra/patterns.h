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

#ifndef NSRA_PATTERNS_H_
#define NSRA_PATTERNS_H_

#include <string>
#include <vector>

#include "nsra/ir.h"
#include "nsra/semantics.h"

namespace nsra {

struct PatternLowering {
  std::vector<Decl> new_decls;
  BoolExpr cond;
  bool exists_bound = false;  // implies new_decls is empty
};

// "An object of C invokes m": declares `MethodAccess m` with the method
// name and receiver type conditions. The negative form wraps the same
// conditions in `not (exists (MethodAccess m | ...))`.
PatternLowering lower_invocation(const std::string& class_name,
                                 const std::string& method_name,
                                 bool positive);

// The invocation conditions alone, over an already declared variable.
BoolExpr invocation_condition(const std::string& class_name,
                              const std::string& method_name);

// Same enclosing callable, and `before` ends on a strictly earlier line.
// `X follows Y` is lower_ordering(Y, X). Throws UndeclaredSubject.
BoolExpr lower_ordering(const std::string& before, const std::string& after,
                        const Scope& scope);

// count (m.getAnArgument()) = n and m.getArgument(i).getType().toString()
// = type_names[i] for each i; negated when !positive. Throws
// UndeclaredSubject, EmptyList.
BoolExpr lower_signature(const std::string& method_name,
                         const std::vector<std::string>& type_names,
                         bool positive, const Scope& scope);

}  // namespace nsra

#endif  // NSRA_PATTERNS_H_
