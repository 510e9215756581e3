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

#ifndef NSRA_METRICS_H_
#define NSRA_METRICS_H_

#include <map>
#include <string>
#include <string_view>

namespace nsra {

struct HalsteadCounts {
  long n1 = 0;  // distinct operators
  long n2 = 0;  // distinct operands
  long N1 = 0;  // total operators
  long N2 = 0;  // total operands

  long vocabulary() const { return n1 + n2; }
  long length() const { return N1 + N2; }
  // V = N log2 n; 0 when the vocabulary is empty or a single symbol.
  double volume() const;
  // D = (n1 / 2) (N2 / n2); 0 when there are no operands.
  double difficulty() const;
  double effort() const { return difficulty() * volume(); }
  // Seconds, Stroud number 18.
  double time() const { return effort() / 18.0; }

  friend bool operator==(const HalsteadCounts&, const HalsteadCounts&) = default;
};

// Occurrence tallies keyed by symbol text, from which counts are derived.
struct HalsteadTally {
  std::map<std::string, long> operators;
  std::map<std::string, long> operands;
  HalsteadCounts counts() const;
};

// Counting over the normalized token stream:
//  - operands: user terminals (class and method names, string and integer
//    literals, list items);
//  - operators: every other construct. The fixed phrases "an object of",
//    "it is necessary that", "it is false that" and "does not invoke" count
//    as one operator each; "if ... then" counts once (as "if"); attribute
//    words and type nouns are operators; periods count, list brackets and
//    commas do not; the "of" inserted when rewriting a possessive does not.
// Throws whatever parsing the query throws.
HalsteadTally tally_nsra(std::string_view query_text);
HalsteadCounts halstead_nsra(std::string_view query_text);

// Every lexical token counts. Operands are the variables bound in `from` or
// `exists` plus string and integer literals; keywords, type names, library
// method names and punctuation are operators. Throws Error(LexError).
HalsteadTally tally_ql(std::string_view ql_text);
HalsteadCounts halstead_ql(std::string_view ql_text);

struct ComparisonRow {
  HalsteadCounts nsra;
  HalsteadCounts ql;
  double vocabulary_reduction_pct = 0;  // 100 (1 - n_nsra / n_ql)
  double length_reduction_pct = 0;      // 100 (1 - N_nsra / N_ql)
  double effort_ratio = 0;              // E_ql / E_nsra; 0 if E_nsra = 0
  double time_ratio = 0;
};

// Throws Error(DivisionByZero) when ql.length() is 0.
ComparisonRow compare(const HalsteadCounts& nsra, const HalsteadCounts& ql);

// Plain-text table (header plus one line per row) and JSON forms.
std::string format_rows(const std::map<std::string, ComparisonRow>& rows);
std::string rows_to_json(const std::map<std::string, ComparisonRow>& rows);

}  // namespace nsra

#endif  // NSRA_METRICS_H_
