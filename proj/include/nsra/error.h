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

#ifndef NSRA_ERROR_H_
#define NSRA_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsra/span.h"

namespace nsra {

enum class ErrorKind {
  // Tokenizer / parser.
  kUnterminatedString,
  kIllegalCharacter,
  kSyntaxError,
  kUnknownOrdinal,
  kEmptyList,
  // Profiles and attribute lookup.
  kConfigParseError,
  kDuplicateAttribute,
  kBadTemplate,
  kUnknownAttribute,
  kOrdinalNotAllowed,
  kMissingOrdinal,
  // Lowering.
  kUndeclaredSubject,
  kDuplicateDeclaration,
  kUnknownType,
  // QL text and metrics.
  kLexError,
  kDivisionByZero,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure surfaced by the library. Source-located errors carry a span
// into the text being processed; profile errors carry a 1-based line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::optional<Span> span = {})
      : std::runtime_error(std::move(message)), kind_(kind), span_(span) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<Span>& span() const { return span_; }

  // Tokens the parser would have accepted (SyntaxError only).
  const std::vector<std::string>& expected() const { return expected_; }
  Error& with_expected(std::vector<std::string> expected) {
    expected_ = std::move(expected);
    return *this;
  }

  // 1-based profile line (ConfigParseError and friends).
  std::optional<int> line() const { return line_; }
  Error& with_line(int line) {
    line_ = line;
    return *this;
  }

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
  std::vector<std::string> expected_;
  std::optional<int> line_;
};

// Non-fatal notes collected while compiling (e.g. unaliased type names).
struct Warning {
  std::string message;
  std::optional<Span> span;
};

// `file:line:col: severity: message`, the format editors jump on.
std::string format_diagnostic(std::string_view file, std::string_view text,
                              std::optional<Span> span,
                              std::string_view severity,
                              std::string_view message);

}  // namespace nsra

#endif  // NSRA_ERROR_H_
