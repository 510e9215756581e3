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

#ifndef NSRA_SEMANTICS_H_
#define NSRA_SEMANTICS_H_

#include <set>
#include <string>
#include <vector>

#include "nsra/ast.h"
#include "nsra/error.h"
#include "nsra/ir.h"
#include "nsra/registry.h"

namespace nsra {

// Names an expression may refer to while lowering.
struct Scope {
  std::set<std::string> declared;
};

// Lowers a parsed query. Declarations come from top-level positive
// invocation patterns and type assumptions in first-mention order; every
// other top-level statement is conjoined into the condition, followed by
// the combined necessity constraints. Throws Error (UnknownAttribute,
// UndeclaredSubject, DuplicateDeclaration, UnknownType, ...). Warnings
// (e.g. unaliased type names) are appended to `warnings` when given.
QueryIR lower(const QueryAst& ast, const Registry& reg,
              std::vector<Warning>* warnings = nullptr);

// Same as lower, skipping the final simplification pass.
QueryIR lower_unsimplified(const QueryAst& ast, const Registry& reg,
                           std::vector<Warning>* warnings = nullptr);

// Resolves an expression through the registry. When `comparison_is_string`
// and the outermost attribute is object-valued, toString() is appended.
QlExpr resolve_exp(const Exp& e, const Registry& reg,
                   bool comparison_is_string, const Scope& scope);

// lhs = item1 or lhs = item2 ...; a single item yields a bare Eq.
BoolExpr expand_membership(const QlExpr& lhs, const std::vector<QlExpr>& items);

// not (p) or q.
BoolExpr desugar_implication(BoolExpr p, BoolExpr q);

// [T1] -> not T1; [T1..Tn] -> not T1 or ... or not Tn.
BoolExpr apply_necessity(std::vector<BoolExpr> constraints);

}  // namespace nsra

#endif  // NSRA_SEMANTICS_H_
