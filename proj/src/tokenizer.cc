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

#include "typic/tokenizer.h"

#include <unicode/brkiter.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <mutex>

#include "typic/error.h"

namespace typic {
namespace {

// Code point index for every UTF-16 offset of `text` (size length()+1).
std::vector<size_t> Utf16ToCodePoint(const icu::UnicodeString &text) {
  std::vector<size_t> map(text.length() + 1, 0);
  size_t cp = 0;
  int32_t i = 0;
  while (i < text.length()) {
    map[i] = cp;
    int32_t next = text.moveIndex32(i, 1);
    for (int32_t k = i + 1; k < next; ++k) map[k] = cp;
    i = next;
    ++cp;
  }
  map[text.length()] = cp;
  return map;
}

std::string ToUtf8(const icu::UnicodeString &text) {
  std::string out;
  text.toUTF8String(out);
  return out;
}

class UnicodeWordTokenizer : public Tokenizer {
 public:
  UnicodeWordTokenizer() {
    UErrorCode status = U_ZERO_ERROR;
    prototype_.reset(
        icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
    if (U_FAILURE(status)) {
      throw Error(ErrorCode::kUnknownTokenizer,
                  std::string("ICU word iterator unavailable: ") +
                      u_errorName(status));
    }
  }

  std::string_view id() const override { return "unicode-word"; }

  std::vector<Token> Tokenize(std::string_view text) const override {
    icu::UnicodeString utext = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    std::unique_ptr<icu::BreakIterator> it;
    {
      std::lock_guard<std::mutex> lock(mu_);
      it.reset(prototype_->clone());
    }
    it->setText(utext);
    std::vector<size_t> cp = Utf16ToCodePoint(utext);
    std::vector<Token> tokens;
    int32_t start = it->first();
    for (int32_t end = it->next(); end != icu::BreakIterator::DONE;
         start = end, end = it->next()) {
      if (it->getRuleStatus() < UBRK_WORD_NONE_LIMIT) continue;
      icu::UnicodeString piece(utext, start, end - start);
      tokens.push_back({ToUtf8(piece), cp[start], cp[end]});
    }
    return tokens;
  }

 private:
  mutable std::mutex mu_;
  std::unique_ptr<icu::BreakIterator> prototype_;
};

class WhitespaceTokenizer : public Tokenizer {
 public:
  std::string_view id() const override { return "whitespace"; }

  std::vector<Token> Tokenize(std::string_view text) const override {
    icu::UnicodeString utext = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    std::vector<Token> tokens;
    size_t cp = 0;
    int32_t i = 0;
    int32_t start = -1;
    size_t start_cp = 0;
    while (i <= utext.length()) {
      bool at_end = i == utext.length();
      UChar32 c = at_end ? 0 : utext.char32At(i);
      bool space = at_end || u_isUWhiteSpace(c);
      if (space && start >= 0) {
        tokens.push_back(
            {ToUtf8(icu::UnicodeString(utext, start, i - start)), start_cp,
             cp});
        start = -1;
      } else if (!space && start < 0) {
        start = i;
        start_cp = cp;
      }
      if (at_end) break;
      i = utext.moveIndex32(i, 1);
      ++cp;
    }
    return tokens;
  }
};

bool IsPunct(UChar32 c) {
  return u_ispunct(c) || u_hasBinaryProperty(c, UCHAR_PATTERN_SYNTAX);
}

}  // namespace

std::unique_ptr<Tokenizer> MakeTokenizer(std::string_view id) {
  if (id == "unicode-word") return std::make_unique<UnicodeWordTokenizer>();
  if (id == "whitespace") return std::make_unique<WhitespaceTokenizer>();
  throw Error(ErrorCode::kUnknownTokenizer,
              "unknown tokenizer '" + std::string(id) + "'");
}

std::vector<std::string> AvailableTokenizers() {
  return {"unicode-word", "whitespace"};
}

std::string CaseFold(std::string_view text) {
  icu::UnicodeString utext = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  utext.foldCase();
  return ToUtf8(utext);
}

std::vector<std::string> NormalizedTokens(const Tokenizer &tokenizer,
                                          std::string_view text) {
  std::vector<std::string> out;
  for (const Token &token : tokenizer.Tokenize(text)) {
    icu::UnicodeString u = icu::UnicodeString::fromUTF8(token.text);
    int32_t begin = 0;
    int32_t end = u.length();
    while (begin < end && IsPunct(u.char32At(begin))) {
      begin = u.moveIndex32(begin, 1);
    }
    while (end > begin && IsPunct(u.char32At(u.moveIndex32(end, -1)))) {
      end = u.moveIndex32(end, -1);
    }
    if (begin == end) continue;
    icu::UnicodeString trimmed(u, begin, end - begin);
    trimmed.foldCase();
    out.push_back(ToUtf8(trimmed));
  }
  return out;
}

}  // namespace typic
