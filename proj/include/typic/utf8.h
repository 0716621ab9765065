// Copyright 2026 The TYPIC Toolkit Authors.
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

#ifndef TYPIC_UTF8_H_
#define TYPIC_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace typic {

// Character offsets throughout the toolkit count Unicode code points, not
// bytes, so spans mean the same thing to clients in any language.

bool IsValidUtf8(std::string_view text);

// Number of code points in a valid UTF-8 string.
size_t CodePointCount(std::string_view text);

// Byte offset of every code point boundary; the result has
// CodePointCount(text) + 1 entries, the last one being text.size().
std::vector<size_t> CodePointBoundaries(std::string_view text);

// Substring covering code points [begin, end). Throws Error(kSpanError) when
// the range is not inside the text.
std::string_view SliceCodePoints(std::string_view text, size_t begin,
                                 size_t end);

}  // namespace typic

#endif  // TYPIC_UTF8_H_
