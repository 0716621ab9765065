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

#include "typic/chunker.h"

#include <set>

#include "typic/utf8.h"

namespace typic {
namespace {

const std::set<std::string, std::less<>> &BoundaryWords() {
  static const auto *words = new std::set<std::string, std::less<>>{
      // English.
      "a", "about", "after", "all", "also", "although", "an", "and", "are",
      "as", "at", "be", "because", "been", "before", "being", "but", "by",
      "can", "could", "did", "do", "does", "due", "even", "for", "from",
      "had", "has", "have", "he", "her", "his", "how", "however", "i", "if",
      "in", "into", "is", "it", "its", "just", "may", "might", "more", "most",
      "much", "must", "my", "not", "of", "on", "or", "our", "say", "says",
      "she", "should", "so", "some", "such", "than", "that", "the", "their",
      "them", "then", "there", "these", "they", "this", "those", "though",
      "thus", "to", "too", "very", "was", "we", "were", "what", "when",
      "where", "which", "while", "who", "why", "will", "with", "without",
      "would", "you", "your",
      // Japanese particles, copulas and auxiliaries.
      "が", "は", "を", "に", "へ", "で", "と", "の", "も", "や", "か", "ね",
      "よ", "な", "ば", "て", "た", "だ", "です", "ます", "から", "まで",
      "より", "など", "ので", "のに", "けど", "けれど", "しかし", "また",
      "そして", "つまり", "なぜ", "ため", "こと", "もの", "という", "として",
      "について", "によって", "ある", "いる", "する", "なる", "れる", "られる",
  };
  return *words;
}

}  // namespace

BoundaryChunker::BoundaryChunker(std::string_view tokenizer_id)
    : tokenizer_(MakeTokenizer(tokenizer_id)) {}

bool BoundaryChunker::IsBoundaryWord(std::string_view folded_token) {
  return BoundaryWords().count(folded_token) > 0;
}

std::vector<Chunk> BoundaryChunker::Split(std::string_view text) const {
  std::vector<Token> tokens = tokenizer_->Tokenize(text);
  std::vector<size_t> bytes = CodePointBoundaries(text);
  auto gap_has_punctuation = [&](size_t from, size_t to) {
    for (size_t i = bytes[from]; i < bytes[to]; ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return true;
    }
    return false;
  };
  std::vector<Chunk> chunks;
  Chunk current;
  bool open = false;
  auto close = [&]() {
    if (open) {
      current.text = std::string(text.substr(
          bytes[current.span.begin],
          bytes[current.span.end] - bytes[current.span.begin]));
      chunks.push_back(std::move(current));
      current = Chunk();
    }
    open = false;
  };
  size_t previous_end = 0;
  for (const Token &token : tokens) {
    if (open && gap_has_punctuation(previous_end, token.begin)) close();
    previous_end = token.end;
    std::string folded = CaseFold(token.text);
    if (IsBoundaryWord(folded)) {
      close();
      continue;
    }
    if (!open) {
      open = true;
      current.span.begin = token.begin;
    }
    current.span.end = token.end;
    current.tokens.push_back(std::move(folded));
  }
  close();
  return chunks;
}

}  // namespace typic
