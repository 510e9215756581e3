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

#ifndef NSRA_QLGEN_H_
#define NSRA_QLGEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "nsra/ir.h"
#include "nsra/span.h"

namespace nsra {

struct RenderOptions {
  int line_width = 100;  // >= 40
  int indent = 2;        // continuation indent for wrapped where-clauses
  std::string header;    // emitted verbatim before the query when nonempty
};

// from/where/select text for `ir`. The from-clause is omitted when there are
// no declarations (selecting the constant 1), the where-clause when the
// condition is trivially true. Deterministic.
std::string render(const QueryIR& ir, const RenderOptions& opts = {});

// Condition text with parentheses only where precedence requires, plus
// around every `not` operand and `exists` body.
std::string render_condition(const BoolExpr& e);

// --- QL text ---------------------------------------------------------------

enum class QlTokenKind { kIdentifier, kKeyword, kString, kInt, kPunct };

struct QlToken {
  QlTokenKind kind;
  std::string text;  // source text; strings keep their quotes
  Span span;
};

// Throws Error(LexError).
std::vector<QlToken> lex_ql(std::string_view text);

// A from/where/select query read back from text.
struct QlQuery {
  std::vector<Decl> decls;
  bool has_where = false;
  BoolExpr condition = make_true();
  std::vector<QlExpr> selects;
  friend bool operator==(const QlQuery&, const QlQuery&) = default;
};

// Minimal infix reader for the QL subset this compiler emits: and/or/not,
// exists, `=`/`<` comparisons over call chains, count and literals. The
// condition tree is returned exactly as parenthesized, unflattened.
// Throws Error(LexError, SyntaxError).
QlQuery read_ql(std::string_view text);

// Flattens And-in-And and Or-in-Or (associativity-only parentheses).
BoolExpr flatten_junctions(const BoolExpr& e);

// Canonical form for golden comparison: whitespace and token spacing
// collapsed, associativity-redundant and atom-wrapping parentheses removed,
// Java constants with a lost underscore restored ("Cipher.WRAP MODE" ->
// "Cipher.WRAP_MODE"). Order is preserved. Idempotent; falls back to
// token-level spacing when the text is outside the readable subset.
std::string normalize_ql(std::string_view text);

}  // namespace nsra

#endif  // NSRA_QLGEN_H_
