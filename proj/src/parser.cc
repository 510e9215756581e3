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

#include "nsra/parser.h"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <string>
#include <utility>

#include "nsra/error.h"

namespace nsra {

const Ident* innermost_ident(const Exp& e) {
  const Exp* cur = &e;
  while (const auto* p = std::get_if<Prefixed>(&cur->node)) cur = &*p->inner;
  return std::get_if<Ident>(&cur->node);
}

Span exp_span(const Exp& e) {
  if (const auto* p = std::get_if<Prefixed>(&e.node)) return p->span;
  if (const auto* id = std::get_if<Ident>(&e.node)) return id->span;
  return Span{};
}

namespace {

Statement make_and(Statement a, Statement b) {
  return Statement{AndStatement{std::move(a), std::move(b)}};
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t source_size)
      : tokens_(tokens), source_size_(source_size) {
    for (const auto& t : tokens_) {
      source_size_ = std::max(source_size_, t.span.end);
    }
  }

  QueryAst run() {
    QueryAst ast;
    while (!at_end()) ast.statements.push_back(parse_sentence());
    if (ast.statements.empty()) fail({"statement"});
    return ast;
  }

 private:
  // --- token helpers -------------------------------------------------------

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  bool peek_word(std::string_view w, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->kind == TokenKind::kWord && t->text == w;
  }

  bool peek_kind(TokenKind kind, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->kind == kind;
  }

  bool peek_phrase(std::initializer_list<std::string_view> words) const {
    std::size_t i = 0;
    for (auto w : words) {
      if (!peek_word(w, i++)) return false;
    }
    return true;
  }

  void advance(std::size_t n = 1) { pos_ += n; }

  bool accept_word(std::string_view w) {
    if (!peek_word(w)) return false;
    advance();
    return true;
  }

  Span here() const {
    if (const Token* t = peek()) return t->span;
    return Span{source_size_, source_size_};
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    if (const Token* t = peek()) {
      msg += ", found '" + t->text + "'";
    } else {
      msg += ", found end of input";
    }
    throw Error(ErrorKind::kSyntaxError, msg, here())
        .with_expected(std::move(expected));
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail({"'" + std::string(w) + "'"});
  }

  const Token& expect_kind(TokenKind kind, std::string what) {
    if (!peek_kind(kind)) fail({std::move(what)});
    const Token& t = *peek();
    advance();
    return t;
  }

  // --- grammar -------------------------------------------------------------

  Statement parse_sentence() {
    Statement s = [&] {
      if (peek_phrase({"it", "is", "necessary", "that"})) {
        advance(4);
        return Statement{NecessityStatement{parse_statement()}};
      }
      return parse_statement();
    }();
    if (!peek_kind(TokenKind::kPeriod)) {
      fail({"'.'", "'and'", "'or'"});
    }
    advance();
    return s;
  }

  Statement parse_statement() {
    Statement lhs = parse_and();
    while (accept_word("or")) lhs = Statement{OrStatement{lhs, parse_and()}};
    return lhs;
  }

  Statement parse_and() {
    Statement lhs = parse_unary();
    while (peek_word("and")) {
      if (peek_word("is", 1)) {
        // "and is ..." only continues a basic statement, which has already
        // consumed its own continuations.
        advance();
        fail({"a subject before 'is'"});
      }
      advance();
      lhs = make_and(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Statement parse_unary() {
    if (peek_phrase({"it", "is", "false", "that"})) {
      advance(4);
      return Statement{NotStatement{parse_unary()}};
    }
    if (peek_phrase({"it", "is", "necessary", "that"})) {
      throw Error(ErrorKind::kSyntaxError,
                  "'it is necessary that' may only start a sentence",
                  here())
          .with_expected({"statement"});
    }
    if (accept_word("if")) {
      Statement cond = parse_statement();
      if (peek_kind(TokenKind::kComma) && peek_word("then", 1)) advance();
      expect_word("then");
      return Statement{IfStatement{std::move(cond), parse_unary()}};
    }
    if (peek_word("object") || ((peek_word("an") || peek_word("a")) &&
                                peek_word("object", 1))) {
      return parse_invocation();
    }
    if (peek_kind(TokenKind::kIdentifier) &&
        (peek_word("precedes", 1) || peek_word("follows", 1))) {
      return parse_ordering();
    }
    return parse_basic();
  }

  Statement parse_invocation() {
    Span start = here();
    if (!accept_word("an")) accept_word("a");
    expect_word("object");
    expect_word("of");
    std::string cls = expect_kind(TokenKind::kIdentifier, "class name").text;
    bool positive = true;
    if (accept_word("invokes")) {
      positive = true;
    } else if (peek_phrase({"does", "not", "invoke"})) {
      advance(3);
      positive = false;
    } else {
      fail({"'invokes'", "'does not invoke'"});
    }
    const Token& m = expect_kind(TokenKind::kIdentifier, "method name");
    return Statement{InvocationPattern{cls, m.text, positive,
                                       Span{start.start, m.span.end}}};
  }

  Statement parse_ordering() {
    const Token& a = *peek();
    advance();
    OrderDirection dir = peek_word("precedes") ? OrderDirection::kPrecedes
                                               : OrderDirection::kFollows;
    advance();
    const Token& b = expect_kind(TokenKind::kIdentifier, "method name");
    return Statement{
        OrderingPattern{a.text, b.text, dir, Span{a.span.start, b.span.end}}};
  }

  Statement parse_basic() {
    Exp lhs = parse_exp();
    if (!accept_word("is")) {
      if (std::holds_alternative<Ident>(lhs.node)) {
        fail({"'is'", "'precedes'", "'follows'"});
      }
      fail({"'is'"});
    }
    Statement s = parse_basic_tail(lhs);
    while (peek_word("and") && peek_word("is", 1)) {
      advance(2);
      s = make_and(std::move(s), parse_basic_tail(lhs));
    }
    return s;
  }

  // Everything after "is"; `lhs` is the (possibly elided) subject.
  Statement parse_basic_tail(const Exp& lhs) {
    bool negated = accept_word("not");
    if (accept_word("in")) {
      return Statement{BasicStatement{lhs, negated, parse_list()}};
    }
    if (peek_kind(TokenKind::kListOpen)) {
      Span list_span = here();
      const auto* sig = std::get_if<Prefixed>(&lhs.node);
      const Ident* subject =
          sig ? std::get_if<Ident>(&sig->inner->node) : nullptr;
      if (!sig || sig->attribute != "signature" || sig->ordinal || !subject) {
        fail({"'in'"});
      }
      LiteralList items = parse_list();
      SignaturePattern pat{subject->name, {}, !negated,
                           Span{sig->span.start, list_span.end}};
      for (const auto& item : items) {
        if (const auto* s = std::get_if<std::string>(&item.value)) {
          pat.type_names.push_back(*s);
        } else {
          throw Error(ErrorKind::kSyntaxError,
                      "signature lists hold type names as strings",
                      list_span)
              .with_expected({"string literal"});
        }
      }
      return Statement{std::move(pat)};
    }
    if (peek_word("a") || peek_word("an")) {
      advance();
      std::string noun;
      while (peek_kind(TokenKind::kIdentifier)) {
        if (!noun.empty()) noun += ' ';
        noun += peek()->text;
        advance();
      }
      if (noun.empty()) fail({"type noun"});
      return Statement{BasicStatement{lhs, negated, TypeAssumption{noun}}};
    }
    Exp rhs = parse_exp();
    // Equality is symmetric; keep the literal on the right.
    if (std::holds_alternative<Literal>(lhs.node) &&
        !std::holds_alternative<Literal>(rhs.node)) {
      return Statement{BasicStatement{std::move(rhs), negated, lhs}};
    }
    return Statement{BasicStatement{lhs, negated, std::move(rhs)}};
  }

  Exp parse_exp() {
    const Token* t = peek();
    if (!t) fail({"expression"});
    if (t->kind == TokenKind::kOrdinal) {
      int n = ordinal_value(t->text);
      if (n == 0) {
        throw Error(ErrorKind::kUnknownOrdinal,
                    "unsupported ordinal '" + t->text +
                        "' (first through tenth are supported)",
                    t->span);
      }
      Span start = t->span;
      advance();
      if (!(peek_kind(TokenKind::kIdentifier) && peek_word("of", 1))) {
        fail({"attribute followed by 'of'"});
      }
      std::string attr = peek()->text;
      advance(2);
      Exp inner = parse_exp();
      Span span{start.start, end_of(inner, start.end)};
      return Exp{Prefixed{attr, n, std::move(inner), span}};
    }
    if (t->kind == TokenKind::kIdentifier) {
      if (peek_word("of", 1)) {
        Span start = t->span;
        std::string attr = t->text;
        advance(2);
        Exp inner = parse_exp();
        Span span{start.start, end_of(inner, start.end)};
        return Exp{Prefixed{attr, std::nullopt, std::move(inner), span}};
      }
      advance();
      return Exp{Ident{t->text, t->span}};
    }
    if (t->kind == TokenKind::kString || t->kind == TokenKind::kInt) {
      advance();
      return Exp{parse_literal(*t)};
    }
    fail({"expression"});
  }

  static std::size_t end_of(const Exp& e, std::size_t fallback) {
    Span s = exp_span(e);
    return s.empty() ? fallback : s.end;
  }

  Literal parse_literal(const Token& t) const {
    if (t.kind == TokenKind::kString) return Literal{t.value()};
    std::int64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw Error(ErrorKind::kSyntaxError,
                  "integer literal out of range: " + t.text, t.span)
          .with_expected({"integer literal"});
    }
    return Literal{v};
  }

  LiteralList parse_list() {
    Span open = expect_kind(TokenKind::kListOpen, "'['").span;
    if (peek_kind(TokenKind::kListClose)) {
      Span close = peek()->span;
      throw Error(ErrorKind::kEmptyList, "list must not be empty",
                  Span{open.start, close.end});
    }
    LiteralList items;
    while (true) {
      if (!peek_kind(TokenKind::kString) && !peek_kind(TokenKind::kInt)) {
        fail({"string literal", "integer literal"});
      }
      items.push_back(parse_literal(*peek()));
      advance();
      if (peek_kind(TokenKind::kComma)) {
        advance();
        continue;
      }
      if (peek_kind(TokenKind::kListClose)) {
        advance();
        return items;
      }
      fail({"','", "']'"});
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t source_size_;
  std::size_t pos_ = 0;
};

}  // namespace

QueryAst parse_query(const std::vector<Token>& tokens,
                     std::size_t source_size) {
  return Parser(tokens, source_size).run();
}

QueryAst parse_text(std::string_view text) {
  return parse_query(normalize(tokenize(text)), text.size());
}

}  // namespace nsra
