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

#ifndef NSRA_REGISTRY_H_
#define NSRA_REGISTRY_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nsra {

// Placeholder for the ordinal adjective ("second argument" -> 1).
struct OrdinalSlot {
  friend bool operator==(const OrdinalSlot&, const OrdinalSlot&) = default;
};

using CallArg = std::variant<OrdinalSlot, std::string, std::int64_t>;

struct CallStep {
  std::string method;
  std::vector<CallArg> args;

  // `method(arg, ...)`, with the ordinal slot filled by `ordinal_index`
  // (zero-based) when present.
  std::string render(std::int64_t ordinal_index = 0) const;
  bool has_ordinal_slot() const;
  friend bool operator==(const CallStep&, const CallStep&) = default;
};

enum class ResultKind {
  kString,  // comparable to a string literal as-is
  kObject,  // needs toString() before a string comparison
};

struct AttributeRule {
  std::string word;
  std::vector<CallStep> steps;  // nonempty
  ResultKind result = ResultKind::kObject;
  // String literals compared against this attribute are type names and go
  // through the registry's alias table ("PublicKey" -> qualified name).
  bool aliases_types = false;

  bool has_ordinal_slot() const;
  // Template text applied to `base`, e.g. `X.getArgument(1)`.
  std::string render(std::string_view base, std::int64_t ordinal_index = 0) const;
  friend bool operator==(const AttributeRule&, const AttributeRule&) = default;
};

// Immutable after construction; share freely across threads.
struct Registry {
  std::map<std::string, AttributeRule> rules;
  std::map<std::string, std::string> type_aliases;  // simple -> qualified
  std::map<std::string, std::string> ql_type_names;  // english noun -> QL type

  friend bool operator==(const Registry&, const Registry&) = default;
};

// Java cryptography profile: name, type, argument, method, algorithm, mode,
// padding; aliases for the key/certificate types.
Registry builtin_crypto_profile();

// Builtin profile overlaid with `config_text`. Throws Error
// (ConfigParseError, DuplicateAttribute, BadTemplate).
Registry load_profile(std::string_view config_text);

// Overlays `config_text` onto `base`; later rules shadow earlier ones.
Registry overlay_profile(Registry base, std::string_view config_text);

// Throws Error(UnknownAttribute) listing the known words.
const AttributeRule& lookup_attribute(std::string_view word,
                                      const Registry& reg);

struct AliasResolution {
  std::string name;
  bool resolved = false;  // false: unknown simple name passed through
};

// Qualified names (containing '.') and primitive names pass through
// silently; unknown simple names pass through with resolved = false.
AliasResolution resolve_type_alias(std::string_view name, const Registry& reg);

// Canonical profile text for `reg` (rules, aliases, types sections).
std::string dump_profile(const Registry& reg);

}  // namespace nsra

#endif  // NSRA_REGISTRY_H_
