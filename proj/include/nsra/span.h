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

#ifndef NSRA_SPAN_H_
#define NSRA_SPAN_H_

#include <cstddef>
#include <string_view>

namespace nsra {

// Half-open byte range [start, end) into a source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool empty() const { return start >= end; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct LineCol {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, counted in bytes
};

// Maps a byte offset to a line/column pair. Offsets past the end clamp to
// the position just after the last byte.
LineCol locate(std::string_view text, std::size_t offset);

}  // namespace nsra

#endif  // NSRA_SPAN_H_
