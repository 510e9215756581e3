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

#ifndef NSRA_TOKEN_H_
#define NSRA_TOKEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "nsra/span.h"

namespace nsra {

enum class TokenKind {
  kWord,          // closed-class English keyword ("is", "of", "if", ...)
  kOrdinal,       // "first", "second", ..., also unsupported ones ("eleventh")
  kString,        // "..." or “...”
  kInt,
  kIdentifier,    // user terminals and attribute words
  kListOpen,
  kListClose,
  kComma,
  kPeriod,
  kApostropheS,   // possessive clitic
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  // Source slice for tokenizer output (quotes included for strings).
  // Normalization lowercases keywords and may synthesize tokens.
  std::string text;
  Span span;
  // Inserted by normalization rather than written by the user.
  bool synthetic = false;

  // Decoded content of a string literal; the text itself otherwise.
  std::string value() const;

  // Kind and text only; spans and provenance are not part of identity.
  bool same_as(const Token& other) const {
    return kind == other.kind && text == other.text;
  }
};

// Splits UTF-8 query text into tokens. Throws Error (UnterminatedString,
// IllegalCharacter).
std::vector<Token> tokenize(std::string_view text);

// Canonicalizes paraphrases: "doesn't" -> "does not", `X's A` -> `A of X`,
// drops articles that carry no meaning, lowercases keywords. Total and
// idempotent.
std::vector<Token> normalize(std::vector<Token> tokens);

// 1..10 for "first".."tenth"; 0 for any other ordinal word.
int ordinal_value(std::string_view word);

bool is_keyword(std::string_view lowercase_word);

}  // namespace nsra

#endif  // NSRA_TOKEN_H_
