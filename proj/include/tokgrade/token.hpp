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

#ifndef TOKGRADE_TOKEN_HPP
#define TOKGRADE_TOKEN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tokgrade {

enum class TokenKind {
  kIdentifier,
  kKeywordLike,
  kNumberLiteral,
  kStringLiteral,
  kPunctuation,
  kWord,
  kOther,
};

std::string_view to_string(TokenKind kind);
std::optional<TokenKind> token_kind_from_string(std::string_view name);

/// Half-open byte range [start, end) into the source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

/// Decides when two tokens count as the same lexeme.
struct ComparisonPolicy {
  bool case_sensitive = true;

  friend bool operator==(const ComparisonPolicy&,
                         const ComparisonPolicy&) = default;
};

struct Token {
  TokenKind kind = TokenKind::kOther;
  std::string raw;
  std::string normalized;
  Span span;
  std::size_t index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenSequence {
  std::vector<Token> tokens;
  std::string source;
  std::string lexer_id;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
};

/// ASCII case folding. Bytes outside A-Z pass through unchanged, so UTF-8
/// sequences are preserved.
std::string fold_case(std::string_view text);

/// Applies the policy's normalization to raw lexeme text.
std::string normalize(std::string_view raw, const ComparisonPolicy& policy);

/// The text two tokens are compared by under `policy`.
std::string comparison_key(const Token& token, const ComparisonPolicy& policy);

/// Kind does not participate; only normalized text does.
bool tokens_equal(const Token& a, const Token& b,
                  const ComparisonPolicy& policy);

}  // namespace tokgrade

#endif  // TOKGRADE_TOKEN_HPP
