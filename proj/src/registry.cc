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

#include "nsra/registry.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "nsra/error.h"

namespace nsra {
namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

CallStep step(std::string method, std::vector<CallArg> args = {}) {
  return CallStep{std::move(method), std::move(args)};
}

// The transformation string "ALG/MODE/PADDING" quoted in source; field
// `index` after stripping the quotes.
std::vector<CallStep> transformation_field(std::int64_t index) {
  return {step("toString"),
          step("replaceAll", {std::string("\""), std::string("")}),
          step("splitAt", {std::string("/"), index})};
}

AttributeRule rule(std::string word, std::vector<CallStep> steps,
                   ResultKind result, bool aliases_types = false) {
  return AttributeRule{std::move(word), std::move(steps), result,
                       aliases_types};
}

// Parses `a().b("x", 1).c(@ordinal)` from a profile line.
class TemplateParser {
 public:
  TemplateParser(std::string_view text, int line) : text_(text), line_(line) {}

  std::vector<CallStep> run() {
    std::vector<CallStep> steps;
    skip_space();
    while (true) {
      steps.push_back(parse_step());
      skip_space();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] != '.') fail("expected '.' between calls");
      ++pos_;
      skip_space();
    }
    return steps;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kConfigParseError,
                "profile line " + std::to_string(line_) + ": " + why)
        .with_line(line_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  CallStep parse_step() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a method name");
    CallStep s{std::string(text_.substr(start, pos_ - start)), {}};
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return s;
    }
    while (true) {
      skip_space();
      s.args.push_back(parse_arg());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return s;
      }
      fail("expected ',' or ')'");
    }
  }

  CallArg parse_arg() {
    if (text_.substr(pos_, 8) == "@ordinal") {
      pos_ += 8;
      return OrdinalSlot{};
    }
    if (pos_ < text_.size() && text_[pos_] == '"') {
      ++pos_;
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        value += text_[pos_++];
      }
      if (pos_ >= text_.size()) fail("unterminated string");
      ++pos_;
      return value;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-") {
      fail("expected a string, an integer, or @ordinal");
    }
    return static_cast<std::int64_t>(std::stoll(digits));
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

// Splits `template : kind` on a colon outside string literals.
std::pair<std::string_view, std::string_view> split_kind(std::string_view rhs) {
  bool in_string = false;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    char c = rhs[i];
    if (in_string && c == '\\') {
      ++i;
    } else if (c == '"') {
      in_string = !in_string;
    } else if (c == ':' && !in_string) {
      return {trim(rhs.substr(0, i)), trim(rhs.substr(i + 1))};
    }
  }
  return {trim(rhs), {}};
}

}  // namespace

bool CallStep::has_ordinal_slot() const {
  return std::any_of(args.begin(), args.end(), [](const CallArg& a) {
    return std::holds_alternative<OrdinalSlot>(a);
  });
}

std::string CallStep::render(std::int64_t ordinal_index) const {
  std::string out = method + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    const CallArg& a = args[i];
    if (std::holds_alternative<OrdinalSlot>(a)) {
      out += std::to_string(ordinal_index);
    } else if (const auto* s = std::get_if<std::string>(&a)) {
      out += quote(*s);
    } else {
      out += std::to_string(std::get<std::int64_t>(a));
    }
  }
  return out + ")";
}

bool AttributeRule::has_ordinal_slot() const {
  return std::any_of(steps.begin(), steps.end(),
                     [](const CallStep& s) { return s.has_ordinal_slot(); });
}

std::string AttributeRule::render(std::string_view base,
                                  std::int64_t ordinal_index) const {
  std::string out(base);
  for (const auto& s : steps) out += "." + s.render(ordinal_index);
  return out;
}

Registry builtin_crypto_profile() {
  Registry reg;
  auto add = [&](AttributeRule r) { reg.rules.emplace(r.word, std::move(r)); };
  add(rule("name", {step("getName")}, ResultKind::kString));
  add(rule("type", {step("getType")}, ResultKind::kObject, true));
  add(rule("argument", {step("getArgument", {OrdinalSlot{}})},
           ResultKind::kObject));
  add(rule("method", {step("getMethod")}, ResultKind::kObject));
  add(rule("algorithm", transformation_field(0), ResultKind::kString));
  add(rule("mode", transformation_field(1), ResultKind::kString));
  add(rule("padding", transformation_field(2), ResultKind::kString));

  reg.type_aliases = {
      {"PublicKey", "java.security.PublicKey"},
      {"PrivateKey", "java.security.PrivateKey"},
      {"Certificate", "java.security.cert.Certificate"},
  };
  reg.ql_type_names = {
      {"class", "Class"},
      {"variable", "Variable"},
      {"method access", "MethodAccess"},
  };
  return reg;
}

Registry overlay_profile(Registry base, std::string_view config_text) {
  enum class Section { kRules, kAliases, kTypes };
  Section section = Section::kRules;
  std::set<std::string> seen_rules, seen_aliases, seen_types;

  std::istringstream in{std::string(config_text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;

    auto parse_error = [&](const std::string& why) {
      return Error(ErrorKind::kConfigParseError,
                   "profile line " + std::to_string(line) + ": " + why)
          .with_line(line);
    };

    if (text.front() == '[') {
      if (text == "[rules]") {
        section = Section::kRules;
      } else if (text == "[aliases]") {
        section = Section::kAliases;
      } else if (text == "[types]") {
        section = Section::kTypes;
      } else {
        throw parse_error("unknown section " + std::string(text));
      }
      continue;
    }

    std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected 'key = value'");
    std::string key(trim(text.substr(0, eq)));
    std::string_view value = trim(text.substr(eq + 1));
    if (key.empty()) throw parse_error("missing key before '='");
    if (value.empty()) throw parse_error("missing value after '='");

    switch (section) {
      case Section::kAliases:
        if (!seen_aliases.insert(key).second) {
          throw parse_error("duplicate alias '" + key + "'");
        }
        base.type_aliases[key] = std::string(value);
        break;
      case Section::kTypes:
        if (!seen_types.insert(key).second) {
          throw parse_error("duplicate type noun '" + key + "'");
        }
        base.ql_type_names[key] = std::string(value);
        break;
      case Section::kRules: {
        if (!seen_rules.insert(key).second) {
          throw Error(ErrorKind::kDuplicateAttribute,
                      "attribute '" + key + "' defined twice in one profile")
              .with_line(line);
        }
        auto [tmpl, kind] = split_kind(value);
        AttributeRule r;
        r.word = key;
        r.steps = TemplateParser(tmpl, line).run();
        std::size_t slots = 0;
        for (const auto& s : r.steps) {
          for (const auto& a : s.args) {
            slots += std::holds_alternative<OrdinalSlot>(a) ? 1 : 0;
          }
        }
        if (slots > 1) {
          throw Error(ErrorKind::kBadTemplate,
                      "attribute '" + key + "' names the ordinal slot " +
                          std::to_string(slots) + " times")
              .with_line(line);
        }
        if (auto it = base.rules.find(key); it != base.rules.end()) {
          r.result = it->second.result;
          r.aliases_types = it->second.aliases_types;
        }
        if (kind == "string") {
          r.result = ResultKind::kString;
          r.aliases_types = false;
        } else if (kind == "object") {
          r.result = ResultKind::kObject;
          r.aliases_types = false;
        } else if (kind == "type") {
          r.result = ResultKind::kObject;
          r.aliases_types = true;
        } else if (!kind.empty()) {
          throw parse_error("unknown result kind '" + std::string(kind) +
                            "' (string, object, or type)");
        }
        base.rules[key] = std::move(r);
        break;
      }
    }
  }
  return base;
}

Registry load_profile(std::string_view config_text) {
  return overlay_profile(builtin_crypto_profile(), config_text);
}

const AttributeRule& lookup_attribute(std::string_view word,
                                      const Registry& reg) {
  auto it = reg.rules.find(std::string(word));
  if (it != reg.rules.end()) return it->second;
  std::string known;
  for (const auto& [w, _] : reg.rules) {  // std::map keeps them sorted
    if (!known.empty()) known += ", ";
    known += w;
  }
  throw Error(ErrorKind::kUnknownAttribute,
              "unknown attribute '" + std::string(word) +
                  "' (known: " + known + ")");
}

AliasResolution resolve_type_alias(std::string_view name, const Registry& reg) {
  static const std::set<std::string, std::less<>> kPrimitive = {
      "boolean", "byte", "char", "short", "int",
      "long",    "float", "double", "void"};
  if (auto it = reg.type_aliases.find(std::string(name));
      it != reg.type_aliases.end()) {
    return {it->second, true};
  }
  bool passthrough = name.find('.') != std::string_view::npos ||
                     kPrimitive.count(name) > 0 || name.empty();
  return {std::string(name), passthrough};
}

std::string dump_profile(const Registry& reg) {
  std::ostringstream out;
  out << "[rules]\n";
  for (const auto& [word, r] : reg.rules) {
    out << word << " = ";
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      if (i > 0) out << '.';
      const CallStep& s = r.steps[i];
      out << s.method << '(';
      for (std::size_t j = 0; j < s.args.size(); ++j) {
        if (j > 0) out << ", ";
        const CallArg& a = s.args[j];
        if (std::holds_alternative<OrdinalSlot>(a)) {
          out << "@ordinal";
        } else if (const auto* str = std::get_if<std::string>(&a)) {
          out << quote(*str);
        } else {
          out << std::get<std::int64_t>(a);
        }
      }
      out << ')';
    }
    out << " : "
        << (r.aliases_types                   ? "type"
            : r.result == ResultKind::kString ? "string"
                                              : "object")
        << '\n';
  }
  out << "[aliases]\n";
  for (const auto& [k, v] : reg.type_aliases) out << k << " = " << v << '\n';
  out << "[types]\n";
  for (const auto& [k, v] : reg.ql_type_names) out << k << " = " << v << '\n';
  return out.str();
}

}  // namespace nsra
