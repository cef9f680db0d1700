/* Copyright 2026 The Tokgrade Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <string_view>

#include "tokgrade/lexer.hpp"
#include "utf8.hpp"

namespace tokgrade {
namespace {

constexpr char32_t kEmDash = 0x2014;

bool is_letter(const utf8::CodePoint& cp) {
  if (!cp.valid) return false;
  const char32_t c = cp.value;
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  // Latin-1 supplement letters onward, minus the two math signs and the
  // general punctuation block.
  if (c < 0xC0 || c == 0xD7 || c == 0xF7) return false;
  return !(c >= 0x2000 && c <= 0x206F);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_punctuation(const utf8::CodePoint& cp) {
  if (!cp.valid) return false;
  if (cp.value == kEmDash) return true;
  if (cp.value >= 0x80) return false;
  return std::string_view(".,;:!?\"'()").find(static_cast<char>(cp.value)) !=
         std::string_view::npos;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class EnglishLexer final : public Lexer {
 public:
  std::string_view id() const override { return kEnglishLexer; }
  ComparisonPolicy default_policy() const override { return {false}; }

  // Never throws: anything unrecognised becomes a one-character kOther token.
  std::optional<Token> next(std::string_view src, std::size_t& pos,
                            const ComparisonPolicy& policy) const override {
    while (pos < src.size() && is_space(src[pos])) ++pos;
    if (pos >= src.size()) return std::nullopt;

    const std::size_t start = pos;
    const utf8::CodePoint first = utf8::decode(src, pos);
    TokenKind kind = TokenKind::kOther;
    if (is_letter(first)) {
      kind = TokenKind::kWord;
      scan_word(src, pos);
    } else if (is_digit(src[pos])) {
      kind = TokenKind::kNumberLiteral;
      while (pos < src.size() && is_digit(src[pos])) ++pos;
    } else {
      kind = is_punctuation(first) ? TokenKind::kPunctuation : TokenKind::kOther;
      pos += first.length;
    }

    Token token;
    token.kind = kind;
    token.raw = std::string(src.substr(start, pos - start));
    token.normalized = normalize(token.raw, policy);
    token.span = {start, pos};
    return token;
  }

 private:
  // Apostrophes and hyphens join a word only between two letters.
  static void scan_word(std::string_view src, std::size_t& pos) {
    while (pos < src.size()) {
      const utf8::CodePoint cp = utf8::decode(src, pos);
      if (is_letter(cp)) {
        pos += cp.length;
        continue;
      }
      if ((src[pos] == '\'' || src[pos] == '-') && pos + 1 < src.size() &&
          is_letter(utf8::decode(src, pos + 1))) {
        ++pos;
        continue;
      }
      return;
    }
  }
};

}  // namespace

std::unique_ptr<Lexer> make_english_lexer() {
  return std::make_unique<EnglishLexer>();
}

}  // namespace tokgrade
