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

#ifndef NSRA_AST_H_
#define NSRA_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nsra/box.h"
#include "nsra/span.h"

namespace nsra {

struct Literal {
  std::variant<std::string, std::int64_t> value;

  bool is_string() const { return std::holds_alternative<std::string>(value); }
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Exp;

struct Ident {
  std::string name;
  Span span;
  friend bool operator==(const Ident& a, const Ident& b) {
    return a.name == b.name;
  }
};

// `[ordinal] attribute of inner`.
struct Prefixed {
  std::string attribute;
  std::optional<int> ordinal;  // 1-based
  Box<Exp> inner;
  Span span;
  friend bool operator==(const Prefixed& a, const Prefixed& b) {
    return a.attribute == b.attribute && a.ordinal == b.ordinal &&
           a.inner == b.inner;
  }
};

struct Exp {
  std::variant<Literal, Ident, Prefixed> node;
  friend bool operator==(const Exp&, const Exp&) = default;
};

// The innermost identifier of a prefix chain, if any.
const Ident* innermost_ident(const Exp& e);
Span exp_span(const Exp& e);

// `X is a variable`: the noun phrase after the article.
struct TypeAssumption {
  std::string noun;
  friend bool operator==(const TypeAssumption&,
                         const TypeAssumption&) = default;
};

using LiteralList = std::vector<Literal>;

struct Statement;

struct BasicStatement {
  Exp lhs;
  bool negated = false;
  std::variant<Exp, LiteralList, TypeAssumption> rhs;
  friend bool operator==(const BasicStatement&,
                         const BasicStatement&) = default;
};

struct AndStatement {
  Box<Statement> lhs;
  Box<Statement> rhs;
  friend bool operator==(const AndStatement&, const AndStatement&) = default;
};

struct OrStatement {
  Box<Statement> lhs;
  Box<Statement> rhs;
  friend bool operator==(const OrStatement&, const OrStatement&) = default;
};

struct NotStatement {
  Box<Statement> inner;
  friend bool operator==(const NotStatement&, const NotStatement&) = default;
};

struct IfStatement {
  Box<Statement> cond;
  Box<Statement> then;
  friend bool operator==(const IfStatement&, const IfStatement&) = default;
};

struct NecessityStatement {
  Box<Statement> inner;
  friend bool operator==(const NecessityStatement&,
                         const NecessityStatement&) = default;
};

struct InvocationPattern {
  std::string class_name;
  std::string method_name;
  bool positive = true;
  Span span;
  friend bool operator==(const InvocationPattern& a,
                         const InvocationPattern& b) {
    return a.class_name == b.class_name && a.method_name == b.method_name &&
           a.positive == b.positive;
  }
};

enum class OrderDirection { kPrecedes, kFollows };

struct OrderingPattern {
  std::string first;   // subject as written
  std::string second;  // object as written
  OrderDirection direction = OrderDirection::kPrecedes;
  Span span;
  friend bool operator==(const OrderingPattern& a, const OrderingPattern& b) {
    return a.first == b.first && a.second == b.second &&
           a.direction == b.direction;
  }
};

struct SignaturePattern {
  std::string method_name;
  std::vector<std::string> type_names;  // nonempty
  bool positive = true;
  Span span;
  friend bool operator==(const SignaturePattern& a,
                         const SignaturePattern& b) {
    return a.method_name == b.method_name && a.type_names == b.type_names &&
           a.positive == b.positive;
  }
};

struct Statement {
  std::variant<BasicStatement, AndStatement, OrStatement, NotStatement,
               IfStatement, NecessityStatement, InvocationPattern,
               OrderingPattern, SignaturePattern>
      node;
  friend bool operator==(const Statement&, const Statement&) = default;
};

struct QueryAst {
  std::vector<Statement> statements;  // nonempty, source order
  friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

}  // namespace nsra

#endif  // NSRA_AST_H_
