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

#include "typic/utf8.h"

#include <string>

#include "typic/error.h"

namespace typic {
namespace {

// Length of the sequence introduced by a lead byte, 0 if invalid.
int SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 0;
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  size_t i = 0;
  while (i < text.size()) {
    int len = SequenceLength(static_cast<unsigned char>(text[i]));
    if (len == 0 || i + len > text.size()) return false;
    for (int k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) >> 6) != 0x2) return false;
    }
    i += len;
  }
  return true;
}

size_t CodePointCount(std::string_view text) {
  size_t count = 0;
  for (unsigned char c : text) {
    if ((c >> 6) != 0x2) ++count;
  }
  return count;
}

std::vector<size_t> CodePointBoundaries(std::string_view text) {
  std::vector<size_t> offsets;
  offsets.reserve(text.size() + 1);
  for (size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) >> 6) != 0x2) offsets.push_back(i);
  }
  offsets.push_back(text.size());
  return offsets;
}

std::string_view SliceCodePoints(std::string_view text, size_t begin,
                                 size_t end) {
  std::vector<size_t> offsets = CodePointBoundaries(text);
  size_t length = offsets.size() - 1;
  if (begin > end || end > length) {
    throw Error(ErrorCode::kSpanError,
                "span [" + std::to_string(begin) + "," + std::to_string(end) +
                    ") outside text of length " + std::to_string(length));
  }
  return text.substr(offsets[begin], offsets[end] - offsets[begin]);
}

}  // namespace typic
