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

#ifndef NSRA_PARSER_H_
#define NSRA_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "nsra/ast.h"
#include "nsra/token.h"

namespace nsra {

// Parses normalized tokens into a query. Throws Error (SyntaxError,
// UnknownOrdinal, EmptyList). `source_size` bounds end-of-input spans.
QueryAst parse_query(const std::vector<Token>& tokens,
                     std::size_t source_size = 0);

// tokenize + normalize + parse_query.
QueryAst parse_text(std::string_view text);

// Canonical controlled English for a parsed query; re-parses to an equal
// QueryAst.
std::string to_english(const QueryAst& ast);
std::string to_english(const Statement& statement);
std::string to_english(const Exp& exp);

}  // namespace nsra

#endif  // NSRA_PARSER_H_
