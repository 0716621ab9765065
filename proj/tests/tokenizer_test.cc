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

#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.h"
#include "typic/chunker.h"
#include "typic/tokenizer.h"
#include "typic/utf8.h"

namespace typic {
namespace {

using testing::CodeOf;

std::vector<std::string> Texts(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.text);
  return out;
}

TEST_CASE("utf8 helpers count code points") {
  CHECK(CodePointCount("abc") == 3);
  CHECK(CodePointCount("宿題は") == 3);
  CHECK(SliceCodePoints("宿題は多い", 1, 3) == "題は");
  CHECK(IsValidUtf8("宿題"));
  CHECK_FALSE(IsValidUtf8("\xff"));
}

TEST_CASE("unicode-word tokenizer drops punctuation and spaces") {
  auto tok = MakeTokenizer("unicode-word");
  CHECK(tok->id() == "unicode-word");
  std::vector<Token> tokens = tok->Tokenize("Homework, it's tiring!");
  CHECK(Texts(tokens) == std::vector<std::string>{"Homework", "it's", "tiring"});
  CHECK(tokens[0].begin == 0);
  CHECK(tokens[0].end == 8);
  CHECK(tokens[2].begin == 15);
}

TEST_CASE("unicode-word offsets are code points on Japanese text") {
  auto tok = MakeTokenizer("unicode-word");
  const std::string text = "宿題は廃止すべきだ。";
  std::vector<Token> tokens = tok->Tokenize(text);
  REQUIRE(tokens.size() >= 2);
  for (const Token &t : tokens) {
    CHECK(SliceCodePoints(text, t.begin, t.end) == t.text);
  }
  CHECK(tokens.back().end <= CodePointCount(text) - 1);
}

TEST_CASE("whitespace tokenizer") {
  auto tok = MakeTokenizer("whitespace");
  std::vector<Token> tokens = tok->Tokenize("  a  bc\td ");
  CHECK(Texts(tokens) == std::vector<std::string>{"a", "bc", "d"});
  CHECK(tokens[1].begin == 5);
  CHECK(tokens[1].end == 7);
}

TEST_CASE("unknown tokenizer") {
  CHECK(CodeOf([] { MakeTokenizer("bpe"); }) == ErrorCode::kUnknownTokenizer);
  CHECK(AvailableTokenizers() ==
        std::vector<std::string>{"unicode-word", "whitespace"});
}

TEST_CASE("normalized tokens are case-folded") {
  auto tok = MakeTokenizer("unicode-word");
  CHECK(NormalizedTokens(*tok, "Abolishing HOMEWORK.") ==
        std::vector<std::string>{"abolishing", "homework"});
  CHECK(CaseFold("Straße") == "strasse");
}

TEST_CASE("boundary chunker splits at function words and punctuation") {
  BoundaryChunker chunker;
  const std::string text =
      "That is to say even if abolishing homework, students become passive "
      "in character.";
  std::vector<Chunk> chunks = chunker.Split(text);
  std::vector<std::string> texts;
  for (const Chunk &c : chunks) texts.push_back(c.text);
  CHECK(texts == std::vector<std::string>{"abolishing homework",
                                          "students become passive",
                                          "character"});
  for (const Chunk &c : chunks) {
    CHECK(SliceCodePoints(text, c.span.begin, c.span.end) == c.text);
  }
  CHECK(chunks[0].tokens == std::vector<std::string>{"abolishing", "homework"});
}

TEST_CASE("boundary chunker on Japanese particles") {
  BoundaryChunker chunker;
  const std::string text = "宿題を廃止すると学生が受け身になる";
  std::vector<Chunk> chunks = chunker.Split(text);
  REQUIRE_FALSE(chunks.empty());
  for (const Chunk &c : chunks) {
    CHECK(SliceCodePoints(text, c.span.begin, c.span.end) == c.text);
    CHECK(c.text.find("を") == std::string::npos);
  }
  CHECK(chunks[0].text == "宿題");
}

TEST_CASE("boundary chunker on empty and all-boundary text") {
  BoundaryChunker chunker;
  CHECK(chunker.Split("").empty());
  CHECK(chunker.Split("it is the, of a").empty());
  CHECK(BoundaryChunker::IsBoundaryWord("because"));
  CHECK_FALSE(BoundaryChunker::IsBoundaryWord("homework"));
}

}  // namespace
}  // namespace typic
