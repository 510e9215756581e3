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

#ifndef NSRA_TESTS_RANDOM_BOOL_H_
#define NSRA_TESTS_RANDOM_BOOL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "nsra/ir.h"

namespace nsra::testing {

// Atom i is `atom = i`; its truth value is bit i of an assignment.
inline BoolExpr atom(int i) { return make_eq(var("atom"), lit(std::int64_t{i})); }

inline int atom_index(const BoolExpr& leaf) {
  const auto& eq = std::get<Eq>(leaf.node);
  return static_cast<int>(std::get<std::int64_t>(std::get<Lit>(eq.rhs.node).value));
}

inline bool eval_under(const BoolExpr& e, std::uint32_t bits) {
  return evaluate(e, [&](const BoolExpr& leaf) {
    return ((bits >> atom_index(leaf)) & 1u) != 0;
  });
}

// Independent evaluator used as the oracle: a direct recursive walk that
// does not go through nsra::evaluate.
inline bool oracle_eval(const BoolExpr& e, std::uint32_t bits) {
  if (const auto* a = std::get_if<And>(&e.node)) {
    for (const auto& c : a->children) {
      if (!oracle_eval(c, bits)) return false;
    }
    return true;
  }
  if (const auto* o = std::get_if<Or>(&e.node)) {
    for (const auto& c : o->children) {
      if (oracle_eval(c, bits)) return true;
    }
    return false;
  }
  if (const auto* n = std::get_if<Not>(&e.node)) return !oracle_eval(*n->inner, bits);
  if (std::holds_alternative<True>(e.node)) return true;
  return ((bits >> atom_index(e)) & 1u) != 0;
}

// Random and/or/not trees over atoms 0..atoms-1 (every atom may appear).
class BoolGen {
 public:
  explicit BoolGen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  BoolExpr tree(int atoms, int depth = 0) {
    int choice = depth >= 4 ? 0 : uniform(0, 5);
    switch (choice) {
      case 1:
      case 2: {
        std::vector<BoolExpr> kids;
        for (int n = uniform(2, 3); n > 0; --n) kids.push_back(tree(atoms, depth + 1));
        return choice == 1 ? BoolExpr{And{std::move(kids)}}
                           : BoolExpr{Or{std::move(kids)}};
      }
      case 3:
        return BoolExpr{Not{Box<BoolExpr>(tree(atoms, depth + 1))}};
      case 4:
        if (uniform(0, 5) == 0) return make_true();
        [[fallthrough]];
      default:
        return atom(uniform(0, atoms - 1));
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace nsra::testing

#endif  // NSRA_TESTS_RANDOM_BOOL_H_
