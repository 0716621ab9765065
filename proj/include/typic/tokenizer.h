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

#ifndef TYPIC_TOKENIZER_H_
#define TYPIC_TOKENIZER_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace typic {

struct Token {
  std::string text;
  // Code point offsets into the tokenized text, half-open.
  size_t begin = 0;
  size_t end = 0;
};

// Splits text into word tokens. Implementations are immutable after
// construction and safe to share across threads.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;

  virtual std::string_view id() const = 0;
  virtual std::vector<Token> Tokenize(std::string_view text) const = 0;
};

// "unicode-word": ICU word-boundary segmentation (UAX #29 plus dictionary
// segmentation for Japanese); punctuation and whitespace segments dropped.
inline constexpr std::string_view kDefaultTokenizer = "unicode-word";

// Known ids: "unicode-word", "whitespace". Throws Error(kUnknownTokenizer).
std::unique_ptr<Tokenizer> MakeTokenizer(std::string_view id);

std::vector<std::string> AvailableTokenizers();

// Unicode full case folding.
std::string CaseFold(std::string_view text);

// Case-folded token texts with punctuation-only tokens removed and
// punctuation trimmed from token edges.
std::vector<std::string> NormalizedTokens(const Tokenizer &tokenizer,
                                          std::string_view text);

}  // namespace typic

#endif  // TYPIC_TOKENIZER_H_
