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

#include "tokgrade/token.hpp"

#include <array>
#include <utility>

namespace tokgrade {
namespace {

constexpr std::array<std::pair<TokenKind, std::string_view>, 7> kKindNames{{
    {TokenKind::kIdentifier, "identifier"},
    {TokenKind::kKeywordLike, "keyword-like"},
    {TokenKind::kNumberLiteral, "number-literal"},
    {TokenKind::kStringLiteral, "string-literal"},
    {TokenKind::kPunctuation, "punctuation"},
    {TokenKind::kWord, "word"},
    {TokenKind::kOther, "other"},
}};

}  // namespace

std::string_view to_string(TokenKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "other";
}

std::optional<TokenKind> token_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string normalize(std::string_view raw, const ComparisonPolicy& policy) {
  return policy.case_sensitive ? std::string(raw) : fold_case(raw);
}

std::string comparison_key(const Token& token,
                           const ComparisonPolicy& policy) {
  return normalize(token.normalized, policy);
}

bool tokens_equal(const Token& a, const Token& b,
                  const ComparisonPolicy& policy) {
  if (policy.case_sensitive) return a.normalized == b.normalized;
  return fold_case(a.normalized) == fold_case(b.normalized);
}

}  // namespace tokgrade
