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

#include <array>
#include <optional>
#include <string>

#include "nsra/parser.h"

namespace nsra {
namespace {

constexpr std::array<std::string_view, 10> kOrdinalWords = {
    "first", "second", "third", "fourth", "fifth",
    "sixth", "seventh", "eighth", "ninth", "tenth"};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string literal(const Literal& lit) {
  if (const auto* s = std::get_if<std::string>(&lit.value)) return quote(*s);
  return std::to_string(std::get<std::int64_t>(lit.value));
}

std::string list(const LiteralList& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += literal(items[i]);
  }
  return out + "]";
}

// Subject shared by an elliptical chain "X is .. and is ..".
std::optional<Exp> subject(const Statement& s) {
  if (const auto* b = std::get_if<BasicStatement>(&s.node)) return b->lhs;
  if (const auto* sig = std::get_if<SignaturePattern>(&s.node)) {
    return Exp{Prefixed{"signature", std::nullopt,
                        Exp{Ident{sig->method_name, {}}}, {}}};
  }
  if (const auto* a = std::get_if<AndStatement>(&s.node)) {
    auto l = subject(*a->lhs);
    auto r = subject(*a->rhs);
    if (l && r && *l == *r && !std::holds_alternative<AndStatement>(a->rhs->node)) {
      return l;
    }
  }
  return std::nullopt;
}

// The part of a basic/signature statement after its subject.
std::string tail(const Statement& s) {
  if (const auto* b = std::get_if<BasicStatement>(&s.node)) {
    std::string out = b->negated ? "is not " : "is ";
    if (const auto* items = std::get_if<LiteralList>(&b->rhs)) {
      return out + "in " + list(*items);
    }
    if (const auto* t = std::get_if<TypeAssumption>(&b->rhs)) {
      bool vowel = !t->noun.empty() &&
                   std::string_view("aeiouAEIOU").find(t->noun[0]) !=
                       std::string_view::npos;
      return out + (vowel ? "an " : "a ") + t->noun;
    }
    return out + to_english(std::get<Exp>(b->rhs));
  }
  const auto& sig = std::get<SignaturePattern>(s.node);
  LiteralList items;
  for (const auto& name : sig.type_names) items.push_back(Literal{name});
  return std::string(sig.positive ? "is " : "is not ") + list(items);
}

struct Printer {
  std::string statement(const Statement& s) const {
    return std::visit([&](const auto& node) { return print(node, s); },
                      s.node);
  }

  std::string print(const BasicStatement& b, const Statement& s) const {
    return to_english(b.lhs) + " " + tail(s);
  }
  std::string print(const SignaturePattern& sig, const Statement& s) const {
    return "signature of " + sig.method_name + " " + tail(s);
  }
  std::string print(const AndStatement& a, const Statement& s) const {
    if (subject(s)) return statement(*a.lhs) + " and " + tail(*a.rhs);
    return statement(*a.lhs) + " and " + statement(*a.rhs);
  }
  std::string print(const OrStatement& o, const Statement&) const {
    return statement(*o.lhs) + " or " + statement(*o.rhs);
  }
  std::string print(const NotStatement& n, const Statement&) const {
    return "it is false that " + statement(*n.inner);
  }
  std::string print(const IfStatement& i, const Statement&) const {
    return "if " + statement(*i.cond) + " then " + statement(*i.then);
  }
  std::string print(const NecessityStatement& n, const Statement&) const {
    return "it is necessary that " + statement(*n.inner);
  }
  std::string print(const InvocationPattern& p, const Statement&) const {
    return "an object of " + p.class_name +
           (p.positive ? " invokes " : " does not invoke ") + p.method_name;
  }
  std::string print(const OrderingPattern& p, const Statement&) const {
    return p.first +
           (p.direction == OrderDirection::kPrecedes ? " precedes "
                                                     : " follows ") +
           p.second;
  }
};

}  // namespace

std::string to_english(const Exp& exp) {
  if (const auto* lit = std::get_if<Literal>(&exp.node)) return literal(*lit);
  if (const auto* id = std::get_if<Ident>(&exp.node)) return id->name;
  const auto& p = std::get<Prefixed>(exp.node);
  std::string out;
  if (p.ordinal) {
    int n = *p.ordinal;
    out += n >= 1 && n <= 10 ? std::string(kOrdinalWords[n - 1])
                             : std::to_string(n) + "th";
    out += ' ';
  }
  return out + p.attribute + " of " + to_english(*p.inner);
}

std::string to_english(const Statement& statement) {
  return Printer{}.statement(statement);
}

std::string to_english(const QueryAst& ast) {
  std::string out;
  for (std::size_t i = 0; i < ast.statements.size(); ++i) {
    if (i > 0) out += '\n';
    out += to_english(ast.statements[i]) + ".";
  }
  return out;
}

}  // namespace nsra
