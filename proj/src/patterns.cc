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

#include "nsra/patterns.h"

#include "nsra/error.h"

namespace nsra {
namespace {

constexpr const char* kMethodAccess = "MethodAccess";

void require_declared(const std::string& name, const Scope& scope) {
  if (!scope.declared.count(name)) {
    throw Error(ErrorKind::kUndeclaredSubject,
                "'" + name +
                    "' is not declared; introduce it with \"An object of "
                    "<Class> invokes " +
                    name + ".\"");
  }
}

}  // namespace

BoolExpr invocation_condition(const std::string& class_name,
                              const std::string& method_name) {
  return make_and(
      {make_eq(chain(var(method_name), {"getMethod()", "getName()"}),
               lit(method_name)),
       make_eq(chain(var(method_name), {"getReceiverType()", "getName()"}),
               lit(class_name))});
}

PatternLowering lower_invocation(const std::string& class_name,
                                 const std::string& method_name,
                                 bool positive) {
  BoolExpr cond = invocation_condition(class_name, method_name);
  if (positive) {
    return PatternLowering{{Decl{method_name, kMethodAccess}}, std::move(cond),
                           false};
  }
  return PatternLowering{
      {},
      make_not(make_exists(Decl{method_name, kMethodAccess}, std::move(cond))),
      true};
}

BoolExpr lower_ordering(const std::string& before, const std::string& after,
                        const Scope& scope) {
  require_declared(before, scope);
  require_declared(after, scope);
  return make_and(
      {make_eq(chain(var(before), {"getEnclosingCallable()"}),
               chain(var(after), {"getEnclosingCallable()"})),
       make_lt(chain(var(before), {"getLocation()", "getEndLine()"}),
               chain(var(after), {"getLocation()", "getEndLine()"}))});
}

BoolExpr lower_signature(const std::string& method_name,
                         const std::vector<std::string>& type_names,
                         bool positive, const Scope& scope) {
  if (type_names.empty()) {
    throw Error(ErrorKind::kEmptyList, "a signature needs at least one type");
  }
  require_declared(method_name, scope);
  std::vector<BoolExpr> conjuncts;
  conjuncts.push_back(
      make_eq(QlExpr{Count{chain(var(method_name), {"getAnArgument()"})}},
              lit(static_cast<std::int64_t>(type_names.size()))));
  for (std::size_t i = 0; i < type_names.size(); ++i) {
    conjuncts.push_back(make_eq(
        chain(var(method_name), {"getArgument(" + std::to_string(i) + ")",
                                 "getType()", "toString()"}),
        lit(type_names[i])));
  }
  BoolExpr sig = make_and(std::move(conjuncts));
  return positive ? sig : make_not(std::move(sig));
}

}  // namespace nsra
