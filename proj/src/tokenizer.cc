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
#include <array>
#include <cctype>
#include <string>

#include "nsra/error.h"
#include "nsra/token.h"

namespace nsra {
namespace {

constexpr std::array<std::string_view, 10> kOrdinals = {
    "first", "second", "third", "fourth", "fifth",
    "sixth", "seventh", "eighth", "ninth", "tenth"};

// Recognized so that they fail loudly instead of parsing as identifiers.
constexpr std::array<std::string_view, 19> kUnsupportedOrdinals = {
    "eleventh",   "twelfth",    "thirteenth", "fourteenth", "fifteenth",
    "sixteenth",  "seventeenth", "eighteenth", "nineteenth", "twentieth",
    "thirtieth",  "fortieth",   "fiftieth",   "sixtieth",   "seventieth",
    "eightieth",  "ninetieth",  "hundredth",  "thousandth"};

constexpr std::array<std::string_view, 22> kKeywords = {
    "a",    "an",   "the",      "is",     "in",       "of",
    "not",  "does", "do",       "it",     "false",    "that",
    "if",   "then", "and",      "or",     "necessary", "object",
    "invokes", "invoke", "precedes", "follows"};

// UTF-8 encodings of the typographic quotes we accept.
constexpr std::string_view kLeftDoubleQuote = "\xE2\x80\x9C";   // “
constexpr std::string_view kRightDoubleQuote = "\xE2\x80\x9D";  // ”
constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";  // ’

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool starts_with_at(std::string_view text, std::size_t pos,
                    std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

bool is_ordinal_word(std::string_view w) {
  return std::find(kOrdinals.begin(), kOrdinals.end(), w) != kOrdinals.end() ||
         std::find(kUnsupportedOrdinals.begin(), kUnsupportedOrdinals.end(),
                   w) != kUnsupportedOrdinals.end();
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (is_ident_start(c)) {
        scan_word();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        scan_number();
      } else if (c == '"' || starts_with_at(text_, pos_, kLeftDoubleQuote) ||
                 starts_with_at(text_, pos_, kRightDoubleQuote)) {
        scan_string();
      } else if (c == '\'' || starts_with_at(text_, pos_, kRightSingleQuote)) {
        scan_apostrophe();
      } else if (c == '[') {
        single(TokenKind::kListOpen);
      } else if (c == ']') {
        single(TokenKind::kListClose);
      } else if (c == ',') {
        single(TokenKind::kComma);
      } else if (c == '.') {
        single(TokenKind::kPeriod);
      } else {
        std::size_t len = utf8_length(static_cast<unsigned char>(c));
        len = std::min(len, text_.size() - pos_);
        throw Error(ErrorKind::kIllegalCharacter,
                    "illegal character '" +
                        std::string(text_.substr(pos_, len)) + "'",
                    Span{pos_, pos_ + len});
      }
    }
    return std::move(tokens_);
  }

 private:
  void emit(TokenKind kind, std::size_t start, std::size_t end) {
    tokens_.push_back(
        Token{kind, std::string(text_.substr(start, end - start)),
              Span{start, end}});
  }

  void single(TokenKind kind) {
    emit(kind, pos_, pos_ + 1);
    ++pos_;
  }

  void scan_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    // Negative contractions stay one token: "doesn't", "isn't".
    if (pos_ > start && (text_[pos_ - 1] == 'n' || text_[pos_ - 1] == 'N')) {
      std::size_t q = pos_;
      std::size_t qlen = 0;
      if (q < text_.size() && text_[q] == '\'') qlen = 1;
      if (starts_with_at(text_, q, kRightSingleQuote)) qlen = 3;
      if (qlen != 0 && q + qlen < text_.size() &&
          (text_[q + qlen] == 't' || text_[q + qlen] == 'T') &&
          (q + qlen + 1 >= text_.size() || !is_ident_char(text_[q + qlen + 1]))) {
        pos_ = q + qlen + 1;
        emit(TokenKind::kWord, start, pos_);
        return;
      }
    }
    std::string w = lower(text_.substr(start, pos_ - start));
    if (is_ordinal_word(w)) {
      emit(TokenKind::kOrdinal, start, pos_);
    } else if (is_keyword(w)) {
      emit(TokenKind::kWord, start, pos_);
    } else {
      emit(TokenKind::kIdentifier, start, pos_);
    }
  }

  void scan_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      std::size_t suffix = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string s = lower(text_.substr(suffix, pos_ - suffix));
      if (s == "st" || s == "nd" || s == "rd" || s == "th") {
        emit(TokenKind::kOrdinal, start, pos_);
        return;
      }
      throw Error(ErrorKind::kIllegalCharacter,
                  "identifier may not start with a digit",
                  Span{start, pos_});
    }
    emit(TokenKind::kInt, start, pos_);
  }

  void scan_string() {
    std::size_t start = pos_;
    pos_ += text_[pos_] == '"' ? 1 : 3;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        pos_ += 2;
        continue;
      }
      if (text_[pos_] == '"') {
        ++pos_;
        emit(TokenKind::kString, start, pos_);
        return;
      }
      if (starts_with_at(text_, pos_, kRightDoubleQuote) ||
          starts_with_at(text_, pos_, kLeftDoubleQuote)) {
        pos_ += 3;
        emit(TokenKind::kString, start, pos_);
        return;
      }
      if (text_[pos_] == '\n') break;
      ++pos_;
    }
    throw Error(ErrorKind::kUnterminatedString, "unterminated string literal",
                Span{start, pos_});
  }

  void scan_apostrophe() {
    std::size_t start = pos_;
    std::size_t qlen = text_[pos_] == '\'' ? 1 : 3;
    std::size_t s = pos_ + qlen;
    if (s < text_.size() && (text_[s] == 's' || text_[s] == 'S') &&
        (s + 1 >= text_.size() || !is_ident_char(text_[s + 1]))) {
      pos_ = s + 1;
      emit(TokenKind::kApostropheS, start, pos_);
      return;
    }
    throw Error(ErrorKind::kIllegalCharacter,
                "stray apostrophe (only the possessive 's is allowed)",
                Span{start, start + qlen});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Token> tokens_;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kOrdinal: return "ordinal";
    case TokenKind::kString: return "string";
    case TokenKind::kInt: return "int";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kListOpen: return "list-open";
    case TokenKind::kListClose: return "list-close";
    case TokenKind::kComma: return "comma";
    case TokenKind::kPeriod: return "period";
    case TokenKind::kApostropheS: return "apostrophe-s";
  }
  return "token";
}

std::string Token::value() const {
  if (kind != TokenKind::kString) return text;
  std::string_view body = text;
  std::size_t open = body.substr(0, 1) == "\"" ? 1 : 3;
  std::size_t close = body.size() >= 1 && body.back() == '"' ? 1 : 3;
  body = body.substr(open, body.size() - open - close);
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '\\' && i + 1 < body.size()) ++i;
    out += body[i];
  }
  return out;
}

int ordinal_value(std::string_view word) {
  std::string w = lower(word);
  for (std::size_t i = 0; i < kOrdinals.size(); ++i) {
    if (kOrdinals[i] == w) return static_cast<int>(i) + 1;
  }
  // Numeric forms: 1st .. 10th.
  std::size_t digits = 0;
  while (digits < w.size() && std::isdigit(static_cast<unsigned char>(w[digits]))) {
    ++digits;
  }
  if (digits > 0 && digits <= 2 && digits < w.size()) {
    int n = std::stoi(w.substr(0, digits));
    std::string_view suffix = std::string_view(w).substr(digits);
    std::string_view want = (n % 100 >= 11 && n % 100 <= 13) ? "th"
                            : n % 10 == 1                   ? "st"
                            : n % 10 == 2                   ? "nd"
                            : n % 10 == 3                   ? "rd"
                                                            : "th";
    if (n >= 1 && n <= 10 && suffix == want) return n;
  }
  return 0;
}

bool is_keyword(std::string_view lowercase_word) {
  return std::find(kKeywords.begin(), kKeywords.end(), lowercase_word) !=
         kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text) {
  return Tokenizer(text).run();
}

}  // namespace nsra
