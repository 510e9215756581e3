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

#include "nsra/ir.h"

#include <sstream>

namespace nsra {

QlExpr var(std::string name) { return QlExpr{Var{std::move(name)}}; }
QlExpr lit(std::string value) { return QlExpr{Lit{std::move(value)}}; }
QlExpr lit(std::int64_t value) { return QlExpr{Lit{value}}; }

QlExpr chain(QlExpr base, std::vector<std::string> steps) {
  if (steps.empty()) return base;
  if (auto* c = std::get_if<Chain>(&base.node)) {
    for (auto& s : steps) c->steps.push_back(std::move(s));
    return base;
  }
  return QlExpr{Chain{std::move(base), std::move(steps)}};
}

BoolExpr make_eq(QlExpr lhs, QlExpr rhs) {
  return BoolExpr{Eq{std::move(lhs), std::move(rhs)}};
}
BoolExpr make_lt(QlExpr lhs, QlExpr rhs) {
  return BoolExpr{Lt{std::move(lhs), std::move(rhs)}};
}
BoolExpr make_not(BoolExpr inner) { return BoolExpr{Not{std::move(inner)}}; }
BoolExpr make_true() { return BoolExpr{True{}}; }

BoolExpr make_and(std::vector<BoolExpr> children) {
  if (children.empty()) return make_true();
  if (children.size() == 1) return std::move(children.front());
  return BoolExpr{And{std::move(children)}};
}

BoolExpr make_or(std::vector<BoolExpr> children) {
  if (children.empty()) return make_not(make_true());
  if (children.size() == 1) return std::move(children.front());
  return BoolExpr{Or{std::move(children)}};
}

BoolExpr make_exists(Decl decl, BoolExpr body) {
  return BoolExpr{Exists{std::move(decl), std::move(body)}};
}

namespace {

bool is_true(const BoolExpr& e) { return std::holds_alternative<True>(e.node); }

bool is_false(const BoolExpr& e) {
  const auto* n = std::get_if<Not>(&e.node);
  return n && is_true(*n->inner);
}


// Builds And (is_and) or Or from already simplified children.
BoolExpr junction(bool is_and, std::vector<BoolExpr> children, bool flatten) {
  std::vector<BoolExpr> flat;
  for (auto& c : children) {
    if (is_and ? is_true(c) : is_false(c)) continue;  // identity element
    if (is_and ? is_false(c) : is_true(c)) return c;  // absorbing element
    if (flatten && is_and) {
      if (auto* a = std::get_if<And>(&c.node)) {
        for (auto& g : a->children) flat.push_back(std::move(g));
        continue;
      }
    } else if (auto* o = std::get_if<Or>(&c.node); flatten && o) {
      for (auto& g : o->children) flat.push_back(std::move(g));
      continue;
    }
    flat.push_back(std::move(c));
  }
  if (flat.empty()) return is_and ? make_true() : make_not(make_true());
  return is_and ? make_and(std::move(flat)) : make_or(std::move(flat));
}

bool worth_pushing(const std::vector<BoolExpr>& children) {
  std::size_t negated = 0;
  for (const auto& c : children) {
    negated += std::holds_alternative<Not>(c.node) ? 1 : 0;
  }
  return children.size() <= 2 * negated;
}

BoolExpr fold(const BoolExpr& e);

// Folded form of `not e`. Decided top-down on the junction as written, so
// in `not (not p or (q1 or q2))` the outer negation is pushed first.
BoolExpr fold_not(const BoolExpr& e) {
  if (is_true(e)) return make_not(make_true());
  if (const auto* n = std::get_if<Not>(&e.node)) return fold(*n->inner);
  const std::vector<BoolExpr>* children = nullptr;
  bool is_and = false;
  if (const auto* a = std::get_if<And>(&e.node)) {
    children = &a->children;
    is_and = true;
  } else if (const auto* o = std::get_if<Or>(&e.node)) {
    children = &o->children;
  }
  if (children && worth_pushing(*children)) {
    std::vector<BoolExpr> out;
    for (const auto& c : *children) out.push_back(fold_not(c));
    return junction(!is_and, std::move(out), false);
  }
  BoolExpr inner = fold(e);
  if (auto* n = std::get_if<Not>(&inner.node)) return std::move(*n->inner);
  if (is_false(inner)) return make_true();
  return make_not(std::move(inner));
}

// True folding, double negation and negation pushing; no flattening.
BoolExpr fold(const BoolExpr& e) {
  return std::visit(
      [&](const auto& n) -> BoolExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          std::vector<BoolExpr> children;
          for (const auto& c : n.children) children.push_back(fold(c));
          return junction(std::is_same_v<T, And>, std::move(children), false);
        } else if constexpr (std::is_same_v<T, Not>) {
          return fold_not(*n.inner);
        } else if constexpr (std::is_same_v<T, Exists>) {
          return make_exists(n.decl, fold(*n.body));
        } else {
          return e;
        }
      },
      e.node);
}

BoolExpr flatten(const BoolExpr& e) {
  return std::visit(
      [&](const auto& n) -> BoolExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          std::vector<BoolExpr> children;
          for (const auto& c : n.children) children.push_back(flatten(c));
          return junction(std::is_same_v<T, And>, std::move(children), true);
        } else if constexpr (std::is_same_v<T, Not>) {
          return make_not(flatten(*n.inner));
        } else if constexpr (std::is_same_v<T, Exists>) {
          return make_exists(n.decl, flatten(*n.body));
        } else {
          return e;
        }
      },
      e.node);
}

void collect_vars(const QlExpr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, Chain>) {
          collect_vars(*n.base, out);
        } else if constexpr (std::is_same_v<T, Count>) {
          collect_vars(*n.inner, out);
        }
      },
      e.node);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dump(const BoolExpr& e, int depth, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Eq>) {
          out << pad << "(= " << render_expr(n.lhs) << ' '
              << render_expr(n.rhs) << ")\n";
        } else if constexpr (std::is_same_v<T, Lt>) {
          out << pad << "(< " << render_expr(n.lhs) << ' '
              << render_expr(n.rhs) << ")\n";
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          out << pad << (std::is_same_v<T, And> ? "(and\n" : "(or\n");
          for (const auto& c : n.children) dump(c, depth + 1, out);
          out << pad << ")\n";
        } else if constexpr (std::is_same_v<T, Not>) {
          out << pad << "(not\n";
          dump(*n.inner, depth + 1, out);
          out << pad << ")\n";
        } else if constexpr (std::is_same_v<T, Exists>) {
          out << pad << "(exists " << n.decl.ql_type << ' '
              << n.decl.var_name << '\n';
          dump(*n.body, depth + 1, out);
          out << pad << ")\n";
        } else {
          out << pad << "(true)\n";
        }
      },
      e.node);
}

}  // namespace

BoolExpr simplify(const BoolExpr& e) {
  // Flattening can expose a junction worth pushing a negation through; each
  // push removes at least one `not`, so this reaches a fixpoint.
  BoolExpr cur = flatten(fold(e));
  while (true) {
    BoolExpr next = flatten(fold(cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::set<std::string> vars_of(const QlExpr& e) {
  std::set<std::string> out;
  collect_vars(e, out);
  return out;
}

std::set<std::string> free_vars(const BoolExpr& e) {
  std::set<std::string> out;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Eq> || std::is_same_v<T, Lt>) {
          collect_vars(n.lhs, out);
          collect_vars(n.rhs, out);
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          for (const auto& c : n.children) out.merge(free_vars(c));
        } else if constexpr (std::is_same_v<T, Not>) {
          out = free_vars(*n.inner);
        } else if constexpr (std::is_same_v<T, Exists>) {
          out = free_vars(*n.body);
          out.erase(n.decl.var_name);
        }
      },
      e.node);
  return out;
}

bool evaluate(const BoolExpr& e,
              const std::function<bool(const BoolExpr& leaf)>& leaf_value) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, And>) {
          for (const auto& c : n.children) {
            if (!evaluate(c, leaf_value)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Or>) {
          for (const auto& c : n.children) {
            if (evaluate(c, leaf_value)) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Not>) {
          return !evaluate(*n.inner, leaf_value);
        } else if constexpr (std::is_same_v<T, True>) {
          return true;
        } else {
          return leaf_value(e);
        }
      },
      e.node);
}

std::string render_expr(const QlExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Lit>) {
          if (const auto* s = std::get_if<std::string>(&n.value)) {
            return quote(*s);
          }
          return std::to_string(std::get<std::int64_t>(n.value));
        } else if constexpr (std::is_same_v<T, Chain>) {
          std::string out = render_expr(*n.base);
          for (const auto& s : n.steps) out += "." + s;
          return out;
        } else {
          return "count (" + render_expr(*n.inner) + ")";
        }
      },
      e.node);
}

std::string dump_bool(const BoolExpr& e) {
  std::ostringstream out;
  dump(e, 0, out);
  return out.str();
}

std::string dump_ir(const QueryIR& ir) {
  std::ostringstream out;
  for (const auto& d : ir.decls) {
    out << "(decl " << d.ql_type << ' ' << d.var_name << ")\n";
  }
  out << "(where\n";
  dump(ir.condition, 1, out);
  out << ")\n(select";
  for (const auto& s : ir.selects) out << ' ' << s;
  out << ")\n";
  return out.str();
}

}  // namespace nsra
