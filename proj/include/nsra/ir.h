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

#ifndef NSRA_IR_H_
#define NSRA_IR_H_

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nsra/box.h"

namespace nsra {

struct QlExpr;

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

struct Lit {
  std::variant<std::string, std::int64_t> value;
  friend bool operator==(const Lit&, const Lit&) = default;
};

// base.step1().step2(..); steps are rendered call text.
struct Chain {
  Box<QlExpr> base;
  std::vector<std::string> steps;  // nonempty
  friend bool operator==(const Chain&, const Chain&) = default;
};

// count (inner), inner ending in getAnArgument().
struct Count {
  Box<QlExpr> inner;
  friend bool operator==(const Count&, const Count&) = default;
};

struct QlExpr {
  std::variant<Var, Lit, Chain, Count> node;
  friend bool operator==(const QlExpr&, const QlExpr&) = default;
};

QlExpr var(std::string name);
QlExpr lit(std::string value);
QlExpr lit(std::int64_t value);
// Appends steps, merging into an existing chain.
QlExpr chain(QlExpr base, std::vector<std::string> steps);

struct Decl {
  std::string var_name;
  std::string ql_type;
  friend bool operator==(const Decl&, const Decl&) = default;
};

struct BoolExpr;

struct Eq {
  QlExpr lhs, rhs;
  friend bool operator==(const Eq&, const Eq&) = default;
};
struct Lt {
  QlExpr lhs, rhs;
  friend bool operator==(const Lt&, const Lt&) = default;
};
struct And {
  std::vector<BoolExpr> children;
  friend bool operator==(const And&, const And&) = default;
};
struct Or {
  std::vector<BoolExpr> children;
  friend bool operator==(const Or&, const Or&) = default;
};
struct Not {
  Box<BoolExpr> inner;
  friend bool operator==(const Not&, const Not&) = default;
};
struct Exists {
  Decl decl;
  Box<BoolExpr> body;
  friend bool operator==(const Exists&, const Exists&) = default;
};
struct True {
  friend bool operator==(const True&, const True&) = default;
};

struct BoolExpr {
  std::variant<Eq, Lt, And, Or, Not, Exists, True> node;
  friend bool operator==(const BoolExpr&, const BoolExpr&) = default;
};

BoolExpr make_eq(QlExpr lhs, QlExpr rhs);
BoolExpr make_lt(QlExpr lhs, QlExpr rhs);
BoolExpr make_not(BoolExpr inner);
// Zero children -> True, one -> that child, otherwise And/Or as given.
BoolExpr make_and(std::vector<BoolExpr> children);
BoolExpr make_or(std::vector<BoolExpr> children);
BoolExpr make_exists(Decl decl, BoolExpr body);
BoolExpr make_true();

struct QueryIR {
  std::vector<Decl> decls;
  BoolExpr condition = make_true();
  std::vector<std::string> selects;
  friend bool operator==(const QueryIR&, const QueryIR&) = default;
};

// Flattens nested And/Or, removes double negation, folds True, and pushes
// a negation through And/Or when that strictly lowers the number of `not`
// nodes (so `not (not p or q)` becomes `p and not (q)`).
BoolExpr simplify(const BoolExpr& e);

// Variables referenced but not bound by an enclosing Exists.
std::set<std::string> free_vars(const BoolExpr& e);
std::set<std::string> vars_of(const QlExpr& e);

// Truth value under an assignment of Eq/Lt/Exists leaves.
bool evaluate(const BoolExpr& e,
              const std::function<bool(const BoolExpr& leaf)>& leaf_value);

// QL text of an expression: `init.getArgument(1)`, `"RSA"`,
// `count (m.getAnArgument())`. String literals escape `"` and `\`.
std::string render_expr(const QlExpr& e);

// Indented s-expression text; the `--emit ir` format.
std::string dump_ir(const QueryIR& ir);
std::string dump_bool(const BoolExpr& e);

}  // namespace nsra

#endif  // NSRA_IR_H_
