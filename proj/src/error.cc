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

#include "nsra/error.h"

#include <sstream>

namespace nsra {

LineCol locate(std::string_view text, std::size_t offset) {
  if (offset > text.size()) offset = text.size();
  LineCol pos;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnterminatedString: return "UnterminatedString";
    case ErrorKind::kIllegalCharacter: return "IllegalCharacter";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnknownOrdinal: return "UnknownOrdinal";
    case ErrorKind::kEmptyList: return "EmptyList";
    case ErrorKind::kConfigParseError: return "ConfigParseError";
    case ErrorKind::kDuplicateAttribute: return "DuplicateAttribute";
    case ErrorKind::kBadTemplate: return "BadTemplate";
    case ErrorKind::kUnknownAttribute: return "UnknownAttribute";
    case ErrorKind::kOrdinalNotAllowed: return "OrdinalNotAllowed";
    case ErrorKind::kMissingOrdinal: return "MissingOrdinal";
    case ErrorKind::kUndeclaredSubject: return "UndeclaredSubject";
    case ErrorKind::kDuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::kUnknownType: return "UnknownType";
    case ErrorKind::kLexError: return "LexError";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
  }
  return "Error";
}

std::string format_diagnostic(std::string_view file, std::string_view text,
                              std::optional<Span> span,
                              std::string_view severity,
                              std::string_view message) {
  LineCol pos = locate(text, span ? span->start : 0);
  std::ostringstream out;
  out << file << ':' << pos.line << ':' << pos.column << ": " << severity
      << ": " << message;
  return out.str();
}

}  // namespace nsra
