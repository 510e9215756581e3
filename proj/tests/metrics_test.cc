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

#include <cmath>
#include <map>
#include <string>

#include <gtest/gtest.h>

#include "nsra/error.h"
#include "nsra/metrics.h"
#include "test_util.h"

namespace nsra {
namespace {

using Tally = std::map<std::string, long>;

HalsteadCounts counts_of(const Tally& ops, const Tally& opnds) {
  HalsteadCounts c;
  c.n1 = static_cast<long>(ops.size());
  c.n2 = static_cast<long>(opnds.size());
  for (const auto& [_, k] : ops) c.N1 += k;
  for (const auto& [_, k] : opnds) c.N2 += k;
  return c;
}

void expect_formulas(const HalsteadCounts& c) {
  double n = static_cast<double>(c.n1 + c.n2);
  double N = static_cast<double>(c.N1 + c.N2);
  double V = n > 0 ? N * std::log2(n) : 0;
  double D = c.n2 > 0 ? (c.n1 / 2.0) * (static_cast<double>(c.N2) / c.n2) : 0;
  auto near = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  };
  EXPECT_TRUE(near(c.volume(), V));
  EXPECT_TRUE(near(c.difficulty(), D));
  EXPECT_TRUE(near(c.effort(), D * V));
  EXPECT_TRUE(near(c.time(), D * V / 18.0));
}

TEST(Nsra, TwoOperandStatement) {
  HalsteadCounts c = halstead_nsra("a is b.");
  EXPECT_EQ(c.N2, 2);
  EXPECT_EQ(c.n2, 2);
}

// Hand tally of the algorithm-vs-mode query under the documented
// convention, written out symbol by symbol.
TEST(Nsra, AlgorithmVsModeHandTally) {
  Tally ops = {{"an object of", 1}, {"invokes", 1},  {".", 2},
               {"it is necessary that", 1},          {"if", 1},
               {"algorithm", 1},    {"of", 2},       {"first", 2},
               {"argument", 2},     {"is", 2},       {"mode", 1},
               {"in", 1}};
  Tally opnds = {{"Cipher", 1}, {"getInstance", 3}, {"\"RSA\"", 1},
                 {"\"\"", 1},   {"\"ECB\"", 1}};
  HalsteadTally t =
      tally_nsra(testing::read_source("queries/algorithm_vs_mode.nsra"));
  EXPECT_EQ(t.operators, ops);
  EXPECT_EQ(t.operands, opnds);
  EXPECT_EQ(t.counts(), counts_of(ops, opnds));
}

TEST(Nsra, TaskLengthsMatchTable) {
  EXPECT_EQ(halstead_nsra(testing::read_source("queries/key_vs_algorithm.nsra")).length(), 39);
  EXPECT_EQ(halstead_nsra(testing::read_source("queries/algorithm_vs_mode.nsra")).length(), 24);
  EXPECT_EQ(halstead_nsra(testing::read_source("queries/mode_vs_signature.nsra")).length(), 56);
}

TEST(Nsra, ReversedEqualityCountsTheSame) {
  EXPECT_EQ(halstead_nsra("An object of Cipher invokes init. The name of init is \"x\"."),
            halstead_nsra("An object of Cipher invokes init. \"x\" is the name of init."));
}

TEST(Nsra, PossessiveOfIsNotCounted) {
  // The possessive form writes no "of"; the explicit form writes one.
  HalsteadCounts possessive =
      halstead_nsra("An object of Cipher invokes init. init's first argument is 1.");
  HalsteadCounts explicit_of =
      halstead_nsra("An object of Cipher invokes init. The first argument of init is 1.");
  EXPECT_EQ(explicit_of.N1, possessive.N1 + 1);
  EXPECT_EQ(explicit_of.N2, possessive.N2);
}

TEST(Nsra, RecountStable) {
  std::string q = testing::read_source("queries/mode_vs_signature.nsra");
  EXPECT_EQ(halstead_nsra(q), halstead_nsra(q));
}

TEST(Nsra, AppendingNeverShrinks) {
  std::string q = "An object of Cipher invokes init.";
  long last = halstead_nsra(q).length();
  for (const char* s :
       {" An object of Cipher invokes getInstance.", " getInstance precedes init.",
        " It is necessary that init's first argument is 1.",
        " It is false that the name of init is \"x\".", " x is a variable."}) {
    q += s;
    long now = halstead_nsra(q).length();
    EXPECT_GT(now, last) << q;
    last = now;
  }
}

TEST(Nsra, PropagatesParseErrors) {
  try {
    halstead_nsra("getInstance precede init.");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSyntaxError);
  }
}

TEST(Ql, MinimalQuery) {
  HalsteadTally t = tally_ql("from Variable v select v");
  EXPECT_EQ(t.operators, (Tally{{"from", 1}, {"Variable", 1}, {"select", 1}}));
  EXPECT_EQ(t.operands, (Tally{{"v", 2}}));
}

TEST(Ql, IntroQueryHandTally) {
  HalsteadTally t = tally_ql(testing::read_source("tests/golden/cipher_init.ql"));
  Tally ops = {{"from", 1},      {"MethodAccess", 1},    {"where", 1},
               {"select", 1},    {"and", 1},             {".", 4},
               {"(", 4},         {")", 4},               {"=", 2},
               {"getMethod", 1}, {"getName", 2},         {"getReceiverType", 1}};
  Tally opnds = {{"init", 4}, {"\"init\"", 1}, {"\"Cipher\"", 1}};
  EXPECT_EQ(t.operators, ops);
  EXPECT_EQ(t.operands, opnds);
}

TEST(Ql, ExistsBindsOperand) {
  HalsteadTally t = tally_ql("where not (exists (MethodAccess m | m = 1)) select 1");
  EXPECT_EQ(t.operands, (Tally{{"m", 2}, {"1", 2}}));
}

TEST(Ql, LexError) {
  try {
    halstead_ql("from X x where x = #");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLexError);
  }
}

TEST(Derived, Formulas) {
  for (const char* f :
       {"queries/key_vs_algorithm.nsra", "queries/algorithm_vs_mode.nsra",
        "queries/mode_vs_signature.nsra", "queries/cipher_init.nsra"}) {
    expect_formulas(halstead_nsra(testing::read_source(f)));
  }
  expect_formulas(halstead_ql(testing::mode_vs_signature_reference()));
  expect_formulas(HalsteadCounts{});
  expect_formulas(HalsteadCounts{3, 0, 5, 0});
}

TEST(Compare, TableRowsByHand) {
  auto row = [](long vn, long vq, long ln, long lq) {
    return compare(HalsteadCounts{vn, 0, ln, 0}, HalsteadCounts{vq, 0, lq, 0});
  };
  EXPECT_NEAR(row(19, 32, 39, 179).vocabulary_reduction_pct, 100.0 * (1 - 19.0 / 32), 1e-9);
  EXPECT_NEAR(row(26, 42, 56, 434).length_reduction_pct, 87.1, 0.05);
  EXPECT_NEAR(row(19, 32, 1, 1).vocabulary_reduction_pct, 40.6, 0.05);
  EXPECT_NEAR(row(18, 27, 1, 1).vocabulary_reduction_pct, 33.3, 0.05);
  EXPECT_NEAR(row(26, 42, 1, 1).vocabulary_reduction_pct, 38.1, 0.05);
  EXPECT_DOUBLE_EQ(row(5, 5, 7, 7).length_reduction_pct, 0.0);
}

TEST(Compare, RatiosAndZeroLength) {
  HalsteadCounts a{4, 3, 10, 6}, b{8, 6, 40, 30};
  ComparisonRow r = compare(a, b);
  EXPECT_NEAR(r.effort_ratio, b.effort() / a.effort(), 1e-12);
  EXPECT_NEAR(r.time_ratio, r.effort_ratio, 1e-12);
  try {
    compare(a, HalsteadCounts{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivisionByZero);
  }
}

TEST(Report, JsonFields) {
  std::map<std::string, ComparisonRow> rows;
  rows["q"] = compare(HalsteadCounts{2, 2, 4, 4}, HalsteadCounts{4, 4, 8, 8});
  std::string json = rows_to_json(rows);
  for (const char* field : {"vocabNsra", "vocabQl", "lengthNsra", "lengthQl",
                            "reductionPct"}) {
    EXPECT_NE(json.find(field), std::string::npos) << field;
  }
  EXPECT_NE(format_rows(rows).find("50.0%"), std::string::npos);
}

}  // namespace
}  // namespace nsra
