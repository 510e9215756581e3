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

#include "nsra/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "nsra/error.h"
#include "nsra/parser.h"
#include "nsra/qlgen.h"
#include "nsra/token.h"

namespace nsra {
namespace {

const std::array<std::vector<std::string_view>, 4> kPhrases = {{
    {"an", "object", "of"},
    {"it", "is", "necessary", "that"},
    {"it", "is", "false", "that"},
    {"does", "not", "invoke"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::size_t phrase_at(const std::vector<Token>& t, std::size_t i) {
  for (const auto& phrase : kPhrases) {
    if (i + phrase.size() > t.size()) continue;
    bool match = true;
    for (std::size_t k = 0; k < phrase.size() && match; ++k) {
      match = t[i + k].kind == TokenKind::kWord && lower(t[i + k].text) == phrase[k];
    }
    if (match) return phrase.size();
  }
  return 0;
}

bool is_of(const Token& t) {
  return t.kind == TokenKind::kWord && lower(t.text) == "of";
}

}  // namespace

double HalsteadCounts::volume() const {
  long n = vocabulary();
  if (n <= 0) return 0;
  return static_cast<double>(length()) * std::log2(static_cast<double>(n));
}

double HalsteadCounts::difficulty() const {
  if (n2 == 0) return 0;
  return (static_cast<double>(n1) / 2.0) *
         (static_cast<double>(N2) / static_cast<double>(n2));
}

HalsteadCounts HalsteadTally::counts() const {
  HalsteadCounts c;
  c.n1 = static_cast<long>(operators.size());
  c.n2 = static_cast<long>(operands.size());
  for (const auto& [_, k] : operators) c.N1 += k;
  for (const auto& [_, k] : operands) c.N2 += k;
  return c;
}

HalsteadTally tally_nsra(std::string_view query_text) {
  std::vector<Token> tokens = normalize(tokenize(query_text));
  parse_query(tokens, query_text.size());

  HalsteadTally tally;
  bool after_is_a = false;
  for (std::size_t i = 0; i < tokens.size();) {
    if (std::size_t n = phrase_at(tokens, i)) {
      std::string key;
      for (std::size_t k = 0; k < n; ++k) {
        key += (k ? " " : "") + lower(tokens[i + k].text);
      }
      ++tally.operators[key];
      i += n;
      after_is_a = false;
      continue;
    }
    const Token& t = tokens[i];
    bool next_is_of = i + 1 < tokens.size() && is_of(tokens[i + 1]);
    switch (t.kind) {
      case TokenKind::kListOpen:
      case TokenKind::kListClose:
      case TokenKind::kComma:
        break;
      case TokenKind::kString:
      case TokenKind::kInt:
        ++tally.operands[t.text];
        break;
      case TokenKind::kIdentifier:
        if (next_is_of || after_is_a) {
          ++tally.operators[t.text];
        } else {
          ++tally.operands[t.text];
        }
        break;
      case TokenKind::kWord: {
        std::string w = lower(t.text);
        if (t.synthetic && w == "of") break;
        if (w == "then") break;
        ++tally.operators[w];
        if ((w == "a" || w == "an") && i > 0 &&
            (lower(tokens[i - 1].text) == "is" ||
             lower(tokens[i - 1].text) == "not")) {
          after_is_a = true;
          ++i;
          continue;
        }
        break;
      }
      default:
        ++tally.operators[lower(t.text)];
        break;
    }
    if (t.kind != TokenKind::kIdentifier) after_is_a = false;
    ++i;
  }
  return tally;
}

HalsteadCounts halstead_nsra(std::string_view query_text) {
  return tally_nsra(query_text).counts();
}

HalsteadTally tally_ql(std::string_view ql_text) {
  std::vector<QlToken> tokens = lex_ql(ql_text);
  std::set<std::string> bound;
  // `from T v, U w` and `exists (T v | ...)` bind the identifier that
  // directly follows a type identifier.
  bool in_from = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const QlToken& t = tokens[i];
    if (t.kind == QlTokenKind::kKeyword) {
      in_from = t.text == "from";
      if (t.text == "exists" && i + 3 < tokens.size() &&
          tokens[i + 3].kind == QlTokenKind::kIdentifier) {
        bound.insert(tokens[i + 3].text);
      }
      continue;
    }
    if (in_from && t.kind == QlTokenKind::kIdentifier && i > 0 &&
        tokens[i - 1].kind == QlTokenKind::kIdentifier) {
      bound.insert(t.text);
    }
  }
  HalsteadTally tally;
  for (const QlToken& t : tokens) {
    bool operand = t.kind == QlTokenKind::kString ||
                   t.kind == QlTokenKind::kInt ||
                   (t.kind == QlTokenKind::kIdentifier && bound.count(t.text));
    ++(operand ? tally.operands : tally.operators)[t.text];
  }
  return tally;
}

HalsteadCounts halstead_ql(std::string_view ql_text) {
  return tally_ql(ql_text).counts();
}

ComparisonRow compare(const HalsteadCounts& nsra, const HalsteadCounts& ql) {
  if (ql.length() == 0) {
    throw Error(ErrorKind::kDivisionByZero,
                "QL query has length 0; reduction is undefined");
  }
  ComparisonRow row;
  row.nsra = nsra;
  row.ql = ql;
  row.length_reduction_pct =
      100.0 * (1.0 - static_cast<double>(nsra.length()) /
                         static_cast<double>(ql.length()));
  if (ql.vocabulary() > 0) {
    row.vocabulary_reduction_pct =
        100.0 * (1.0 - static_cast<double>(nsra.vocabulary()) /
                           static_cast<double>(ql.vocabulary()));
  }
  if (nsra.effort() > 0) {
    row.effort_ratio = ql.effort() / nsra.effort();
    row.time_ratio = ql.time() / nsra.time();
  }
  return row;
}

std::string format_rows(const std::map<std::string, ComparisonRow>& rows) {
  int width = 5;
  for (const auto& [name, _] : rows) {
    width = std::max(width, static_cast<int>(name.size()));
  }
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s %8s %8s %8s %8s %9s %9s %8s\n", width,
                "query", "vocab", "vocab_ql", "length", "len_ql", "vocab_red",
                "len_red", "effort_x");
  out << line;
  for (const auto& [name, r] : rows) {
    std::snprintf(line, sizeof line,
                  "%-*s %8ld %8ld %8ld %8ld %8.1f%% %8.1f%% %8.2f\n", width,
                  name.c_str(), r.nsra.vocabulary(), r.ql.vocabulary(),
                  r.nsra.length(), r.ql.length(), r.vocabulary_reduction_pct,
                  r.length_reduction_pct, r.effort_ratio);
    out << line;
  }
  return out.str();
}

namespace {

nlohmann::ordered_json counts_json(const HalsteadCounts& c) {
  return {{"n1", c.n1},
          {"n2", c.n2},
          {"N1", c.N1},
          {"N2", c.N2},
          {"vocabulary", c.vocabulary()},
          {"length", c.length()},
          {"volume", c.volume()},
          {"difficulty", c.difficulty()},
          {"effort", c.effort()},
          {"time", c.time()}};
}

}  // namespace

std::string rows_to_json(const std::map<std::string, ComparisonRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [name, r] : rows) {
    out.push_back({{"query", name},
                   {"vocabNsra", r.nsra.vocabulary()},
                   {"vocabQl", r.ql.vocabulary()},
                   {"lengthNsra", r.nsra.length()},
                   {"lengthQl", r.ql.length()},
                   {"reductionPct", r.length_reduction_pct},
                   {"vocabularyReductionPct", r.vocabulary_reduction_pct},
                   {"effortRatio", r.effort_ratio},
                   {"timeRatio", r.time_ratio},
                   {"nsra", counts_json(r.nsra)},
                   {"ql", counts_json(r.ql)}});
  }
  return out.dump(2) + "\n";
}

}  // namespace nsra
