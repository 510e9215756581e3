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

#include "nsra/semantics.h"

#include <map>
#include <set>

#include "nsra/patterns.h"

namespace nsra {
namespace {

// Re-throws span-less errors raised inside `fn` with `span` attached.
template <typename Fn>
auto at(Span span, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.span()) throw;
    Error located(e.kind(), e.what(), span);
    located.with_expected(e.expected());
    if (e.line()) located.with_line(*e.line());
    throw located;
  }
}

Span statement_span(const Statement& s) {
  if (const auto* b = std::get_if<BasicStatement>(&s.node)) {
    return exp_span(b->lhs);
  }
  if (const auto* p = std::get_if<InvocationPattern>(&s.node)) return p->span;
  if (const auto* p = std::get_if<OrderingPattern>(&s.node)) return p->span;
  if (const auto* p = std::get_if<SignaturePattern>(&s.node)) return p->span;
  return Span{};
}

const AttributeRule* outermost_rule(const Exp& e, const Registry& reg) {
  const auto* p = std::get_if<Prefixed>(&e.node);
  if (!p) return nullptr;
  auto it = reg.rules.find(p->attribute);
  return it == reg.rules.end() ? nullptr : &it->second;
}

class Lowerer {
 public:
  Lowerer(const Registry& reg, std::vector<Warning>* warnings)
      : reg_(reg), warnings_(warnings) {}

  QueryIR run(const QueryAst& ast) {
    std::vector<const Statement*> top;
    for (const auto& s : ast.statements) flatten_top(s, top);

    for (const Statement* s : top) collect_decl(*s);

    std::vector<BoolExpr> conjuncts;
    std::vector<BoolExpr> constraints;
    std::set<std::string> invoked;
    for (const Statement* s : top) {
      if (const auto* inv = std::get_if<InvocationPattern>(&s->node);
          inv && inv->positive) {
        if (!invoked.insert(inv->method_name).second) continue;
        conjuncts.push_back(
            invocation_condition(inv->class_name, inv->method_name));
      } else if (is_assumption(*s)) {
        continue;
      } else if (const auto* n = std::get_if<NecessityStatement>(&s->node)) {
        constraints.push_back(lower_statement(*n->inner));
      } else {
        conjuncts.push_back(lower_statement(*s));
      }
    }
    if (!constraints.empty()) {
      conjuncts.push_back(apply_necessity(std::move(constraints)));
    }
    ir_.condition = make_and(std::move(conjuncts));
    for (const auto& d : ir_.decls) ir_.selects.push_back(d.var_name);
    return std::move(ir_);
  }

 private:
  static void flatten_top(const Statement& s,
                          std::vector<const Statement*>& out) {
    if (const auto* a = std::get_if<AndStatement>(&s.node)) {
      flatten_top(*a->lhs, out);
      flatten_top(*a->rhs, out);
      return;
    }
    out.push_back(&s);
  }

  static bool is_assumption(const Statement& s) {
    const auto* b = std::get_if<BasicStatement>(&s.node);
    return b && std::holds_alternative<TypeAssumption>(b->rhs);
  }

  void declare(const std::string& name, const std::string& ql_type,
               Span span) {
    if (!scope_.declared.insert(name).second) {
      throw Error(ErrorKind::kDuplicateDeclaration,
                  "'" + name + "' is declared more than once", span);
    }
    ir_.decls.push_back(Decl{name, ql_type});
  }

  void collect_decl(const Statement& s) {
    if (const auto* inv = std::get_if<InvocationPattern>(&s.node)) {
      if (!inv->positive) return;
      auto [it, fresh] =
          invoked_class_.emplace(inv->method_name, inv->class_name);
      if (!fresh) {
        if (it->second != inv->class_name) {
          throw Error(ErrorKind::kDuplicateDeclaration,
                      "'" + inv->method_name + "' is invoked on both " +
                          it->second + " and " + inv->class_name,
                      inv->span);
        }
        return;  // same invocation stated twice
      }
      PatternLowering pl =
          lower_invocation(inv->class_name, inv->method_name, true);
      for (const auto& d : pl.new_decls) declare(d.var_name, d.ql_type, inv->span);
      return;
    }
    if (!is_assumption(s)) return;
    const auto& b = std::get<BasicStatement>(s.node);
    const auto* id = std::get_if<Ident>(&b.lhs.node);
    Span span = exp_span(b.lhs);
    if (!id) {
      throw Error(ErrorKind::kSyntaxError,
                  "only a plain identifier can be given a type", span)
          .with_expected({"identifier"});
    }
    if (b.negated) {
      throw Error(ErrorKind::kSyntaxError,
                  "a type assumption cannot be negated", span);
    }
    const auto& noun = std::get<TypeAssumption>(b.rhs).noun;
    auto it = reg_.ql_type_names.find(noun);
    if (it == reg_.ql_type_names.end()) {
      std::string known;
      for (const auto& [k, _] : reg_.ql_type_names) {
        known += known.empty() ? k : ", " + k;
      }
      throw Error(ErrorKind::kUnknownType,
                  "unknown type '" + noun + "' (known: " + known + ")", span);
    }
    declare(id->name, it->second, span);
  }

  QlExpr literal_for(const Literal& l, const AttributeRule* rule, Span span) {
    if (const auto* s = std::get_if<std::string>(&l.value)) {
      if (rule && rule->aliases_types) {
        AliasResolution r = resolve_type_alias(*s, reg_);
        if (!r.resolved && warnings_) {
          warnings_->push_back(Warning{
              "type name '" + *s + "' has no alias; emitted unchanged", span});
        }
        return lit(r.name);
      }
      return lit(*s);
    }
    return lit(std::get<std::int64_t>(l.value));
  }

  BoolExpr lower_basic(const BasicStatement& b) {
    Span span = exp_span(b.lhs);
    const AttributeRule* rule = outermost_rule(b.lhs, reg_);
    BoolExpr out = make_true();
    if (const auto* items = std::get_if<LiteralList>(&b.rhs)) {
      bool any_string = false;
      for (const auto& i : *items) any_string |= i.is_string();
      QlExpr lhs = resolve_exp(b.lhs, reg_, any_string, scope_);
      std::vector<QlExpr> values;
      for (const auto& i : *items) values.push_back(literal_for(i, rule, span));
      out = at(span, [&] { return expand_membership(lhs, values); });
    } else if (std::holds_alternative<TypeAssumption>(b.rhs)) {
      throw Error(ErrorKind::kSyntaxError,
                  "a type assumption must be a sentence of its own", span);
    } else {
      const Exp& rhs = std::get<Exp>(b.rhs);
      if (const auto* l = std::get_if<Literal>(&rhs.node)) {
        QlExpr lhs = resolve_exp(b.lhs, reg_, l->is_string(), scope_);
        out = make_eq(std::move(lhs), literal_for(*l, rule, span));
      } else {
        out = make_eq(resolve_exp(b.lhs, reg_, false, scope_),
                      resolve_exp(rhs, reg_, false, scope_));
      }
    }
    return b.negated ? make_not(std::move(out)) : out;
  }

  BoolExpr lower_statement(const Statement& s) {
    return std::visit(
        [&](const auto& n) -> BoolExpr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BasicStatement>) {
            return lower_basic(n);
          } else if constexpr (std::is_same_v<T, AndStatement>) {
            return make_and({lower_statement(*n.lhs), lower_statement(*n.rhs)});
          } else if constexpr (std::is_same_v<T, OrStatement>) {
            return make_or({lower_statement(*n.lhs), lower_statement(*n.rhs)});
          } else if constexpr (std::is_same_v<T, NotStatement>) {
            return make_not(lower_statement(*n.inner));
          } else if constexpr (std::is_same_v<T, IfStatement>) {
            return desugar_implication(lower_statement(*n.cond),
                                       lower_statement(*n.then));
          } else if constexpr (std::is_same_v<T, NecessityStatement>) {
            throw Error(ErrorKind::kSyntaxError,
                        "'it is necessary that' may only start a sentence",
                        statement_span(*n.inner));
          } else if constexpr (std::is_same_v<T, InvocationPattern>) {
            if (n.positive && scope_.declared.count(n.method_name)) {
              return invocation_condition(n.class_name, n.method_name);
            }
            PatternLowering pl =
                lower_invocation(n.class_name, n.method_name, false);
            return n.positive ? std::move(*std::get<Not>(pl.cond.node).inner)
                              : pl.cond;
          } else if constexpr (std::is_same_v<T, OrderingPattern>) {
            return at(n.span, [&] {
              return n.direction == OrderDirection::kPrecedes
                         ? lower_ordering(n.first, n.second, scope_)
                         : lower_ordering(n.second, n.first, scope_);
            });
          } else {
            return at(n.span, [&] {
              return lower_signature(n.method_name, n.type_names, n.positive,
                                     scope_);
            });
          }
        },
        s.node);
  }

  const Registry& reg_;
  std::vector<Warning>* warnings_;
  QueryIR ir_;
  Scope scope_;
  std::map<std::string, std::string> invoked_class_;
};

}  // namespace

QlExpr resolve_exp(const Exp& e, const Registry& reg,
                   bool comparison_is_string, const Scope& scope) {
  if (const auto* l = std::get_if<Literal>(&e.node)) {
    if (const auto* s = std::get_if<std::string>(&l->value)) return lit(*s);
    return lit(std::get<std::int64_t>(l->value));
  }
  if (const auto* id = std::get_if<Ident>(&e.node)) {
    if (!scope.declared.count(id->name)) {
      throw Error(ErrorKind::kUndeclaredSubject,
                  "'" + id->name +
                      "' is not declared; introduce it with an invocation "
                      "pattern or a type assumption",
                  id->span);
    }
    return var(id->name);
  }
  const auto& p = std::get<Prefixed>(e.node);
  const AttributeRule& rule =
      at(p.span, [&]() -> const AttributeRule& {
        return lookup_attribute(p.attribute, reg);
      });
  if (p.ordinal && !rule.has_ordinal_slot()) {
    throw Error(ErrorKind::kOrdinalNotAllowed,
                "attribute '" + p.attribute + "' takes no ordinal", p.span);
  }
  if (!p.ordinal && rule.has_ordinal_slot()) {
    throw Error(ErrorKind::kMissingOrdinal,
                "attribute '" + p.attribute +
                    "' needs an ordinal (first, second, ...)",
                p.span);
  }
  QlExpr base = resolve_exp(*p.inner, reg, false, scope);
  std::vector<std::string> steps;
  std::int64_t index = p.ordinal ? *p.ordinal - 1 : 0;
  for (const auto& s : rule.steps) steps.push_back(s.render(index));
  if (comparison_is_string && rule.result == ResultKind::kObject) {
    steps.push_back("toString()");
  }
  return chain(std::move(base), std::move(steps));
}

BoolExpr expand_membership(const QlExpr& lhs,
                           const std::vector<QlExpr>& items) {
  if (items.empty()) {
    throw Error(ErrorKind::kEmptyList, "membership list must not be empty");
  }
  std::vector<BoolExpr> alternatives;
  for (const auto& item : items) alternatives.push_back(make_eq(lhs, item));
  return make_or(std::move(alternatives));
}

BoolExpr desugar_implication(BoolExpr p, BoolExpr q) {
  return BoolExpr{Or{{make_not(std::move(p)), std::move(q)}}};
}

BoolExpr apply_necessity(std::vector<BoolExpr> constraints) {
  std::vector<BoolExpr> violated;
  for (auto& c : constraints) violated.push_back(make_not(std::move(c)));
  return make_or(std::move(violated));
}

QueryIR lower_unsimplified(const QueryAst& ast, const Registry& reg,
                           std::vector<Warning>* warnings) {
  return Lowerer(reg, warnings).run(ast);
}

QueryIR lower(const QueryAst& ast, const Registry& reg,
              std::vector<Warning>* warnings) {
  QueryIR ir = lower_unsimplified(ast, reg, warnings);
  ir.condition = simplify(ir.condition);
  return ir;
}

}  // namespace nsra
