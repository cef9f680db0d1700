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

// Tokenizer for C-like languages. There is no keyword table: "void" and
// "int" are plain identifiers, and equality between tokens is textual.

#include <array>
#include <string_view>

#include "tokgrade/lexer.hpp"
#include "utf8.hpp"

namespace tokgrade {
namespace {

constexpr std::array<std::string_view, 11> kTwoCharOperators{
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||"};
constexpr std::string_view kOneCharOperators = "{}()[];,.+-*/%=<>!&|^~?:";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class CFamilyLexer final : public Lexer {
 public:
  std::string_view id() const override { return kCFamilyLexer; }
  ComparisonPolicy default_policy() const override { return {true}; }

  std::optional<Token> next(std::string_view src, std::size_t& pos,
                            const ComparisonPolicy& policy) const override {
    skip_separators(src, pos);
    if (pos >= src.size()) return std::nullopt;

    const std::size_t start = pos;
    const TokenKind kind = scan(src, pos);
    Token token;
    token.kind = kind;
    token.raw = std::string(src.substr(start, pos - start));
    token.normalized = normalize(token.raw, policy);
    token.span = {start, pos};
    return token;
  }

 private:
  static void skip_separators(std::string_view src, std::size_t& pos) {
    while (pos < src.size()) {
      if (is_space(src[pos])) {
        ++pos;
      } else if (src.substr(pos, 2) == "//") {
        while (pos < src.size() && src[pos] != '\n') ++pos;
      } else if (src.substr(pos, 2) == "/*") {
        const std::size_t close = src.find("*/", pos + 2);
        if (close == std::string_view::npos) {
          throw LexError(pos, "unterminated block comment");
        }
        pos = close + 2;
      } else {
        return;
      }
    }
  }

  static TokenKind scan(std::string_view src, std::size_t& pos) {
    const char c = src[pos];
    if (is_ident_start(c)) {
      while (pos < src.size() && is_ident_char(src[pos])) ++pos;
      return TokenKind::kIdentifier;
    }
    if (is_digit(c)) {
      while (pos < src.size() && is_digit(src[pos])) ++pos;
      if (pos + 1 < src.size() && src[pos] == '.' && is_digit(src[pos + 1])) {
        ++pos;
        while (pos < src.size() && is_digit(src[pos])) ++pos;
      }
      return TokenKind::kNumberLiteral;
    }
    if (c == '"' || c == '\'') {
      scan_quoted(src, pos);
      return TokenKind::kStringLiteral;
    }
    for (std::string_view op : kTwoCharOperators) {
      if (src.substr(pos, 2) == op) {
        pos += 2;
        return TokenKind::kPunctuation;
      }
    }
    if (kOneCharOperators.find(c) != std::string_view::npos) {
      ++pos;
      return TokenKind::kPunctuation;
    }
    pos += utf8::decode(src, pos).length;
    return TokenKind::kOther;
  }

  // A raw newline ends the literal without closing it, as in C.
  static void scan_quoted(std::string_view src, std::size_t& pos) {
    const std::size_t start = pos;
    const char quote = src[pos++];
    while (pos < src.size()) {
      const char c = src[pos];
      if (c == '\\') {
        pos += 2;
      } else if (c == quote) {
        ++pos;
        return;
      } else if (c == '\n') {
        break;
      } else {
        ++pos;
      }
    }
    throw LexError(start, quote == '"' ? "unterminated string literal"
                                       : "unterminated character literal");
  }
};

}  // namespace

std::unique_ptr<Lexer> make_c_family_lexer() {
  return std::make_unique<CFamilyLexer>();
}

}  // namespace tokgrade
