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

#include "nsra/qlgen.h"

#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "nsra/error.h"

namespace nsra {
namespace {

// --- rendering ---------------------------------------------------------------

enum Prec { kOr = 1, kAnd = 2, kUnary = 3 };

int precedence(const BoolExpr& e) {
  if (std::holds_alternative<Or>(e.node)) return kOr;
  if (std::holds_alternative<And>(e.node)) return kAnd;
  return kUnary;
}

std::string render_bool(const BoolExpr& e);

std::string render_junction(const std::vector<BoolExpr>& children, int prec,
                            std::string_view op) {
  std::string out;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out += op;
    // Same-operator nesting keeps its parentheses so that the tree shape
    // survives a re-read.
    bool wrap = precedence(children[i]) <= prec;
    out += wrap ? "(" + render_bool(children[i]) + ")"
                : render_bool(children[i]);
  }
  return out;
}

std::string render_bool(const BoolExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Eq>) {
          return render_expr(n.lhs) + " = " + render_expr(n.rhs);
        } else if constexpr (std::is_same_v<T, Lt>) {
          return render_expr(n.lhs) + " < " + render_expr(n.rhs);
        } else if constexpr (std::is_same_v<T, And>) {
          return render_junction(n.children, kAnd, " and ");
        } else if constexpr (std::is_same_v<T, Or>) {
          return render_junction(n.children, kOr, " or ");
        } else if constexpr (std::is_same_v<T, Not>) {
          return "not (" + render_bool(*n.inner) + ")";
        } else if constexpr (std::is_same_v<T, Exists>) {
          return "exists (" + n.decl.ql_type + " " + n.decl.var_name + " | " +
                 render_bool(*n.body) + ")";
        } else {
          return "any()";
        }
      },
      e.node);
}

// --- lexing ------------------------------------------------------------------

const std::set<std::string, std::less<>> kQlKeywords = {
    "from", "where", "select", "and", "or", "not", "exists", "count", "any"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// --- reading -----------------------------------------------------------------

std::string unquote(std::string_view text) {
  std::string out;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    if (text[i] == '\\' && i + 2 < text.size()) ++i;
    out += text[i];
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<QlToken> tokens, std::size_t size)
      : tokens_(std::move(tokens)), size_(size) {}

  QlQuery run() {
    QlQuery q;
    if (accept_kw("from")) {
      q.decls.push_back(decl());
      while (accept_punct(",")) q.decls.push_back(decl());
    }
    if (accept_kw("where")) {
      q.has_where = true;
      q.condition = cond();
    }
    expect_kw("select");
    q.selects.push_back(term());
    while (accept_punct(",")) q.selects.push_back(term());
    if (pos_ < tokens_.size()) fail("end of query");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    Span at = pos_ < tokens_.size() ? tokens_[pos_].span : Span{size_, size_};
    throw Error(ErrorKind::kSyntaxError, "expected " + what, at)
        .with_expected({what});
  }

  const QlToken* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool peek_kw(std::string_view kw) const {
    const QlToken* t = peek();
    return t && t->kind == QlTokenKind::kKeyword && t->text == kw;
  }
  bool peek_punct(std::string_view p, std::size_t ahead = 0) const {
    const QlToken* t = peek(ahead);
    return t && t->kind == QlTokenKind::kPunct && t->text == p;
  }
  bool accept_kw(std::string_view kw) {
    if (!peek_kw(kw)) return false;
    ++pos_;
    return true;
  }
  bool accept_punct(std::string_view p) {
    if (!peek_punct(p)) return false;
    ++pos_;
    return true;
  }
  void expect_kw(std::string_view kw) {
    if (!accept_kw(kw)) fail("'" + std::string(kw) + "'");
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail("'" + std::string(p) + "'");
  }
  std::string ident() {
    const QlToken* t = peek();
    if (!t || t->kind != QlTokenKind::kIdentifier) fail("identifier");
    ++pos_;
    return t->text;
  }

  Decl decl() {
    std::string type = ident();
    std::string name = ident();
    return Decl{name, type};
  }

  BoolExpr cond() {
    std::vector<BoolExpr> parts{conj()};
    while (accept_kw("or")) parts.push_back(conj());
    return parts.size() == 1 ? std::move(parts[0]) : BoolExpr{Or{std::move(parts)}};
  }

  BoolExpr conj() {
    std::vector<BoolExpr> parts{unary()};
    while (accept_kw("and")) parts.push_back(unary());
    return parts.size() == 1 ? std::move(parts[0])
                             : BoolExpr{And{std::move(parts)}};
  }

  BoolExpr unary() {
    if (accept_kw("not")) return make_not(unary());
    if (accept_kw("exists")) {
      expect_punct("(");
      Decl d = decl();
      expect_punct("|");
      BoolExpr body = cond();
      expect_punct(")");
      return make_exists(std::move(d), std::move(body));
    }
    if (peek_kw("any") && peek_punct("(", 1) && peek_punct(")", 2)) {
      pos_ += 3;
      return make_true();
    }
    if (accept_punct("(")) {
      BoolExpr inner = cond();
      expect_punct(")");
      return inner;
    }
    QlExpr lhs = term();
    if (accept_punct("=")) return make_eq(std::move(lhs), term());
    if (accept_punct("<")) return make_lt(std::move(lhs), term());
    fail("'=' or '<'");
  }

  QlExpr term() {
    QlExpr base = primary();
    std::vector<std::string> steps;
    while (accept_punct(".")) {
      std::string step = ident();
      expect_punct("(");
      step += "(";
      if (!peek_punct(")")) {
        step += render_expr(term());
        while (accept_punct(",")) step += ", " + render_expr(term());
      }
      expect_punct(")");
      steps.push_back(step + ")");
    }
    return chain(std::move(base), std::move(steps));
  }

  QlExpr primary() {
    const QlToken* t = peek();
    if (!t) fail("expression");
    if (t->kind == QlTokenKind::kKeyword && t->text == "count") {
      ++pos_;
      expect_punct("(");
      QlExpr inner = term();
      expect_punct(")");
      return QlExpr{Count{std::move(inner)}};
    }
    if (t->kind == QlTokenKind::kIdentifier) {
      ++pos_;
      return var(t->text);
    }
    if (t->kind == QlTokenKind::kString) {
      ++pos_;
      return lit(unquote(t->text));
    }
    if (t->kind == QlTokenKind::kInt) {
      ++pos_;
      return lit(static_cast<std::int64_t>(std::stoll(t->text)));
    }
    fail("expression");
  }

  std::vector<QlToken> tokens_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

// "Cipher.WRAP MODE" -> "Cipher.WRAP_MODE": a qualified Java constant whose
// underscores were typeset as spaces.
std::string restore_constant(const std::string& s) {
  static const std::regex kSpacedConstant(
      R"(^[A-Za-z_$][\w$]*(\.[A-Za-z_$][\w$]*)*\.[A-Z][A-Z0-9]*( [A-Z][A-Z0-9]*)+$)");
  if (!std::regex_match(s, kSpacedConstant)) return s;
  std::string out = s;
  for (char& c : out) {
    if (c == ' ') c = '_';
  }
  return out;
}

QlExpr canonical_expr(const QlExpr& e) {
  return std::visit(
      [&](const auto& n) -> QlExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          if (const auto* s = std::get_if<std::string>(&n.value)) {
            return lit(restore_constant(*s));
          }
          return e;
        } else if constexpr (std::is_same_v<T, Chain>) {
          return QlExpr{Chain{canonical_expr(*n.base), n.steps}};
        } else if constexpr (std::is_same_v<T, Count>) {
          return QlExpr{Count{canonical_expr(*n.inner)}};
        } else {
          return e;
        }
      },
      e.node);
}

BoolExpr canonical_bool(const BoolExpr& e) {
  return std::visit(
      [&](const auto& n) -> BoolExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Eq>) {
          return make_eq(canonical_expr(n.lhs), canonical_expr(n.rhs));
        } else if constexpr (std::is_same_v<T, Lt>) {
          return make_lt(canonical_expr(n.lhs), canonical_expr(n.rhs));
        } else if constexpr (std::is_same_v<T, And>) {
          std::vector<BoolExpr> c;
          for (const auto& x : n.children) c.push_back(canonical_bool(x));
          return BoolExpr{And{std::move(c)}};
        } else if constexpr (std::is_same_v<T, Or>) {
          std::vector<BoolExpr> c;
          for (const auto& x : n.children) c.push_back(canonical_bool(x));
          return BoolExpr{Or{std::move(c)}};
        } else if constexpr (std::is_same_v<T, Not>) {
          return make_not(canonical_bool(*n.inner));
        } else if constexpr (std::is_same_v<T, Exists>) {
          return make_exists(n.decl, canonical_bool(*n.body));
        } else {
          return e;
        }
      },
      e.node);
}

// Token-level canonical spacing for text outside the readable subset.
std::string respace(const std::vector<QlToken>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const QlToken& t = tokens[i];
    if (i > 0) {
      const QlToken& prev = tokens[i - 1];
      bool glue = false;
      if (t.kind == QlTokenKind::kPunct &&
          (t.text == "." || t.text == "," || t.text == ")")) {
        glue = true;
      }
      if (prev.kind == QlTokenKind::kPunct &&
          (prev.text == "." || prev.text == "(")) {
        glue = true;
      }
      if (t.kind == QlTokenKind::kPunct && t.text == "(" &&
          prev.kind != QlTokenKind::kKeyword) {
        glue = true;
      }
      if (!glue) out += ' ';
    }
    if (t.kind == QlTokenKind::kString) {
      out += render_expr(lit(restore_constant(unquote(t.text))));
    } else {
      out += t.text;
    }
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
    } else {
      if (space) out += ' ';
      space = false;
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_condition(const BoolExpr& e) { return render_bool(e); }

std::string render(const QueryIR& ir, const RenderOptions& opts) {
  std::ostringstream out;
  if (!opts.header.empty()) {
    out << opts.header;
    if (opts.header.back() != '\n') out << '\n';
  }
  if (!ir.decls.empty()) {
    out << "from ";
    for (std::size_t i = 0; i < ir.decls.size(); ++i) {
      if (i > 0) out << ", ";
      out << ir.decls[i].ql_type << ' ' << ir.decls[i].var_name;
    }
    out << '\n';
  }
  if (!std::holds_alternative<True>(ir.condition.node)) {
    std::string line = "where ";
    const auto* conj = std::get_if<And>(&ir.condition.node);
    std::string whole = "where " + render_bool(ir.condition);
    if (!conj || static_cast<int>(whole.size()) <= opts.line_width) {
      out << whole << '\n';
    } else {
      // Greedy packing of top-level conjuncts; continuation lines indented.
      std::string pad(static_cast<std::size_t>(std::max(opts.indent, 0)), ' ');
      bool first_on_line = true;
      for (std::size_t i = 0; i < conj->children.size(); ++i) {
        const BoolExpr& c = conj->children[i];
        std::string piece = precedence(c) <= kAnd
                                ? "(" + render_bool(c) + ")"
                                : render_bool(c);
        if (i + 1 < conj->children.size()) piece += " and";
        std::string candidate = first_on_line ? line + piece : line + " " + piece;
        if (!first_on_line &&
            static_cast<int>(candidate.size()) > opts.line_width) {
          out << line << '\n';
          line = pad + piece;
        } else {
          line = std::move(candidate);
        }
        first_on_line = false;
      }
      out << line << '\n';
    }
  }
  out << "select ";
  if (ir.selects.empty()) {
    out << "1";
  } else {
    for (std::size_t i = 0; i < ir.selects.size(); ++i) {
      if (i > 0) out << ", ";
      out << ir.selects[i];
    }
  }
  out << '\n';
  return out.str();
}

std::vector<QlToken> lex_ql(std::string_view text) {
  std::vector<QlToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      QlTokenKind kind = kQlKeywords.count(word) ? QlTokenKind::kKeyword
                                                 : QlTokenKind::kIdentifier;
      tokens.push_back(QlToken{kind, std::move(word), Span{start, i}});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      tokens.push_back(QlToken{QlTokenKind::kInt,
                               std::string(text.substr(start, i - start)),
                               Span{start, i}});
    } else if (c == '"') {
      ++i;
      while (i < text.size() && text[i] != '"' && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < text.size()) ++i;
        ++i;
      }
      if (i >= text.size() || text[i] != '"') {
        throw Error(ErrorKind::kLexError, "unterminated string literal",
                    Span{start, i});
      }
      ++i;
      tokens.push_back(QlToken{QlTokenKind::kString,
                               std::string(text.substr(start, i - start)),
                               Span{start, i}});
    } else if (c == '!' || c == '<' || c == '>') {
      ++i;
      if (i < text.size() && text[i] == '=') ++i;
      if (c == '!' && i - start == 1) {
        throw Error(ErrorKind::kLexError, "illegal character '!'",
                    Span{start, i});
      }
      tokens.push_back(QlToken{QlTokenKind::kPunct,
                               std::string(text.substr(start, i - start)),
                               Span{start, i}});
    } else if (std::string_view("().,=|").find(c) != std::string_view::npos) {
      ++i;
      tokens.push_back(
          QlToken{QlTokenKind::kPunct, std::string(1, c), Span{start, i}});
    } else {
      throw Error(ErrorKind::kLexError,
                  std::string("illegal character '") + c + "'",
                  Span{start, start + 1});
    }
  }
  return tokens;
}

QlQuery read_ql(std::string_view text) {
  return Reader(lex_ql(text), text.size()).run();
}

BoolExpr flatten_junctions(const BoolExpr& e) {
  return std::visit(
      [&](const auto& n) -> BoolExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          std::vector<BoolExpr> flat;
          for (const auto& c : n.children) {
            BoolExpr f = flatten_junctions(c);
            if (auto* same = std::get_if<T>(&f.node)) {
              for (auto& g : same->children) flat.push_back(std::move(g));
            } else {
              flat.push_back(std::move(f));
            }
          }
          return BoolExpr{T{std::move(flat)}};
        } else if constexpr (std::is_same_v<T, Not>) {
          return make_not(flatten_junctions(*n.inner));
        } else if constexpr (std::is_same_v<T, Exists>) {
          return make_exists(n.decl, flatten_junctions(*n.body));
        } else {
          return e;
        }
      },
      e.node);
}

std::string normalize_ql(std::string_view text) {
  try {
    QlQuery q = read_ql(text);
    std::string out;
    if (!q.decls.empty()) {
      out += "from ";
      for (std::size_t i = 0; i < q.decls.size(); ++i) {
        if (i > 0) out += ", ";
        out += q.decls[i].ql_type + " " + q.decls[i].var_name;
      }
      out += '\n';
    }
    if (q.has_where) {
      out += "where " +
             render_bool(flatten_junctions(canonical_bool(q.condition))) +
             "\n";
    }
    out += "select ";
    for (std::size_t i = 0; i < q.selects.size(); ++i) {
      if (i > 0) out += ", ";
      out += render_expr(canonical_expr(q.selects[i]));
    }
    return out + "\n";
  } catch (const Error&) {
  }
  try {
    return respace(lex_ql(text)) + "\n";
  } catch (const Error&) {
    return collapse_whitespace(text) + "\n";
  }
}

}  // namespace nsra
