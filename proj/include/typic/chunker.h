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

#ifndef TYPIC_CHUNKER_H_
#define TYPIC_CHUNKER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "typic/corpus.h"
#include "typic/tokenizer.h"

namespace typic {

// A candidate phrase with code-point offsets into the chunked text.
struct Chunk {
  std::string text;
  CharSpan span;
  // Case-folded tokens of the chunk.
  std::vector<std::string> tokens;
};

class Chunker {
 public:
  virtual ~Chunker() = default;
  virtual std::vector<Chunk> Split(std::string_view text) const = 0;
};

// Splits token runs at punctuation and at function words (English
// determiners, auxiliaries, conjunctions and prepositions; Japanese
// particles and copulas). Each maximal run of remaining tokens is a chunk.
class BoundaryChunker : public Chunker {
 public:
  explicit BoundaryChunker(
      std::string_view tokenizer_id = kDefaultTokenizer);

  std::vector<Chunk> Split(std::string_view text) const override;

  static bool IsBoundaryWord(std::string_view folded_token);

 private:
  std::unique_ptr<Tokenizer> tokenizer_;
};

}  // namespace typic

#endif  // TYPIC_CHUNKER_H_
