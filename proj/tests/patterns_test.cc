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

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nsra/compiler.h"
#include "nsra/error.h"
#include "nsra/parser.h"
#include "nsra/patterns.h"
#include "nsra/qlgen.h"

namespace nsra {
namespace {

Scope scope_of(std::initializer_list<const char*> names) {
  Scope s;
  for (const char* n : names) s.declared.insert(n);
  return s;
}

TEST(Invocation, Positive) {
  PatternLowering p = lower_invocation("Cipher", "init", true);
  ASSERT_EQ(p.new_decls.size(), 1u);
  EXPECT_EQ(p.new_decls[0], (Decl{"init", "MethodAccess"}));
  EXPECT_FALSE(p.exists_bound);
  EXPECT_EQ(render_condition(p.cond),
            R"(init.getMethod().getName() = "init" and init.getReceiverType().getName() = "Cipher")");
}

TEST(Invocation, GetInstance) {
  EXPECT_EQ(render_condition(lower_invocation("Cipher", "getInstance", true).cond),
            R"(getInstance.getMethod().getName() = "getInstance" and getInstance.getReceiverType().getName() = "Cipher")");
}

TEST(Invocation, NegativeIsClosedExists) {
  PatternLowering p = lower_invocation("Cipher", "init", false);
  EXPECT_TRUE(p.new_decls.empty());
  EXPECT_TRUE(p.exists_bound);
  const auto& n = std::get<Not>(p.cond.node);
  const auto& ex = std::get<Exists>(n.inner->node);
  EXPECT_EQ(ex.decl, (Decl{"init", "MethodAccess"}));
  EXPECT_EQ(*ex.body, invocation_condition("Cipher", "init"));
  EXPECT_TRUE(free_vars(p.cond).empty());
  EXPECT_EQ(render_condition(p.cond),
            R"(not (exists (MethodAccess init | init.getMethod().getName() = "init" and init.getReceiverType().getName() = "Cipher")))");
}

TEST(Invocation, Injective) {
  std::vector<std::pair<std::string, std::string>> inputs = {
      {"Cipher", "init"}, {"Cipher", "getInstance"}, {"Mac", "init"},
      {"KeyGenerator", "getInstance"}, {"Signature", "update"}};
  std::set<std::string> seen;
  for (const auto& [c, m] : inputs) {
    EXPECT_TRUE(seen.insert(render_condition(lower_invocation(c, m, true).cond)).second);
  }
}

TEST(Ordering, Conjunction) {
  BoolExpr b = lower_ordering("getInstance", "init", scope_of({"getInstance", "init"}));
  EXPECT_EQ(render_condition(b),
            "getInstance.getEnclosingCallable() = init.getEnclosingCallable() and "
            "getInstance.getLocation().getEndLine() < init.getLocation().getEndLine()");
}

TEST(Ordering, FollowsIsMirror) {
  const std::string decls =
      "An object of Cipher invokes getInstance. An object of Cipher invokes init. ";
  Registry reg = builtin_crypto_profile();
  EXPECT_EQ(compile(decls + "getInstance precedes init.", reg).ir,
            compile(decls + "init follows getInstance.", reg).ir);
}

TEST(Ordering, SelfOrderIsEmittedAsIs) {
  BoolExpr b = lower_ordering("x", "x", scope_of({"x"}));
  EXPECT_EQ(render_condition(b),
            "x.getEnclosingCallable() = x.getEnclosingCallable() and "
            "x.getLocation().getEndLine() < x.getLocation().getEndLine()");
}

TEST(Ordering, Undeclared) {
  try {
    lower_ordering("getInstance", "init", scope_of({"init"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUndeclaredSubject);
  }
}

TEST(Signature, TwoArguments) {
  BoolExpr b = lower_signature("getInstance", {"int", "Certificate"}, true,
                               scope_of({"getInstance"}));
  EXPECT_EQ(render_condition(b),
            R"(count (getInstance.getAnArgument()) = 2 and getInstance.getArgument(0).getType().toString() = "int" and getInstance.getArgument(1).getType().toString() = "Certificate")");
}

TEST(Signature, ThreeArguments) {
  BoolExpr b = lower_signature("getInstance", {"int", "Certificate", "SecureRandom"},
                               true, scope_of({"getInstance"}));
  EXPECT_NE(render_condition(b).find(
                R"(getInstance.getArgument(2).getType().toString() = "SecureRandom")"),
            std::string::npos);
}

TEST(Signature, ConjunctCount) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> types(n, "int");
    BoolExpr b = lower_signature("m", types, true, scope_of({"m"}));
    std::size_t conjuncts =
        std::holds_alternative<And>(b.node) ? std::get<And>(b.node).children.size() : 1;
    EXPECT_EQ(conjuncts, n + 1);
  }
}

TEST(Signature, NegativeSingleton) {
  BoolExpr b = lower_signature("m", {"int"}, false, scope_of({"m"}));
  EXPECT_EQ(render_condition(b),
            R"(not (count (m.getAnArgument()) = 1 and m.getArgument(0).getType().toString() = "int"))");
}

TEST(Signature, Errors) {
  try {
    lower_signature("m", {}, true, scope_of({"m"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyList);
  }
  try {
    lower_signature("m", {"int"}, true, scope_of({}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUndeclaredSubject);
  }
}

}  // namespace
}  // namespace nsra
