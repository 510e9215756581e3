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

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include "nsra/token.h"

namespace nsra {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_word(const Token& t, std::string_view w) {
  return t.kind == TokenKind::kWord && t.text == w;
}

bool is_operand(const Token& t) {
  return t.kind == TokenKind::kIdentifier || t.kind == TokenKind::kString ||
         t.kind == TokenKind::kInt;
}

Token word(std::string text, Span span, bool synthetic) {
  return Token{TokenKind::kWord, std::move(text), span, synthetic};
}

}  // namespace

std::vector<Token> normalize(std::vector<Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  // Start of the most recent possessive rewrite, valid while that rewrite
  // is still the tail of `out`; lets "X's A's B" nest as "B of A of X".
  std::optional<std::size_t> possessive_start;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token t = std::move(tokens[i]);
    const std::string written = t.text;
    if (t.kind == TokenKind::kWord || t.kind == TokenKind::kOrdinal) {
      t.text = lower(t.text);
    }

    if (t.kind == TokenKind::kWord && t.text.size() > 3 &&
        t.text.ends_with("n't")) {
      possessive_start.reset();
      out.push_back(word(t.text.substr(0, t.text.size() - 3), t.span, false));
      out.push_back(word("not", t.span, true));
      continue;
    }
    if (t.kind == TokenKind::kWord && t.text.size() > 5 &&
        t.text.ends_with("n\xE2\x80\x99t")) {
      possessive_start.reset();
      out.push_back(word(t.text.substr(0, t.text.size() - 5), t.span, false));
      out.push_back(word("not", t.span, true));
      continue;
    }

    if (is_word(t, "the")) continue;
    if (is_word(t, "a") || is_word(t, "an")) {
      // Kept where the grammar reads it: "an object of C" and "X is a noun".
      bool before_object = i + 1 < tokens.size() &&
                           tokens[i + 1].kind == TokenKind::kWord &&
                           lower(tokens[i + 1].text) == "object";
      bool after_is = !out.empty() && (is_word(out.back(), "is") ||
                                       is_word(out.back(), "not"));
      bool before_noun =
          i + 1 < tokens.size() &&
          (tokens[i + 1].kind == TokenKind::kIdentifier ||
           tokens[i + 1].kind == TokenKind::kOrdinal);
      if (!before_object && !before_noun) {
        // Not followed by a noun phrase: a user name such as `a is b.`
        t.kind = TokenKind::kIdentifier;
        t.text = written;
        out.push_back(std::move(t));
        continue;
      }
      if (!before_object && !after_is) continue;
      t.text = "a";
      if (before_object) t.text = "an";
    }

    if (t.kind == TokenKind::kApostropheS && !out.empty() &&
        is_operand(out.back())) {
      // `possessor 's [ordinal] attribute` -> `[ordinal] attribute of possessor`.
      std::size_t j = i + 1;
      std::optional<Token> ordinal;
      if (j < tokens.size() && tokens[j].kind == TokenKind::kOrdinal) {
        ordinal = tokens[j];
        ordinal->text = lower(ordinal->text);
        ++j;
      }
      if (j < tokens.size() && tokens[j].kind == TokenKind::kIdentifier) {
        std::size_t from = possessive_start.value_or(out.size() - 1);
        std::vector<Token> possessor(out.begin() + static_cast<long>(from),
                                     out.end());
        out.resize(from);
        if (ordinal) out.push_back(*ordinal);
        out.push_back(tokens[j]);
        out.push_back(word("of", t.span, true));
        for (auto& p : possessor) out.push_back(std::move(p));
        possessive_start = from;
        i = j;
        continue;
      }
    }

    possessive_start.reset();
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace nsra
