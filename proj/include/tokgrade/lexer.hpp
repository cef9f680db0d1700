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

#ifndef TOKGRADE_LEXER_HPP
#define TOKGRADE_LEXER_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokgrade/token.hpp"

namespace tokgrade {

inline constexpr std::string_view kCFamilyLexer = "c-family";
inline constexpr std::string_view kEnglishLexer = "english";

class LexError : public std::runtime_error {
 public:
  LexError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position_(position) {}

  /// Byte offset into the source where the offending construct starts.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownLexer : public std::invalid_argument {
 public:
  explicit UnknownLexer(std::string_view id)
      : std::invalid_argument("unknown lexer \"" + std::string(id) + "\"") {}
};

/// A tokenizer for one language. Implementations are stateless.
class Lexer {
 public:
  virtual ~Lexer() = default;

  virtual std::string_view id() const = 0;
  virtual ComparisonPolicy default_policy() const = 0;

  /// Skips separators starting at `pos` and scans one token. Returns nullopt
  /// at end of input. On success `pos` is left just past the token. The
  /// returned token's index is not set.
  virtual std::optional<Token> next(std::string_view source, std::size_t& pos,
                                    const ComparisonPolicy& policy) const = 0;

  TokenSequence tokenize(std::string_view source,
                         const ComparisonPolicy& policy) const;
};

std::unique_ptr<Lexer> make_c_family_lexer();
std::unique_ptr<Lexer> make_english_lexer();

class LexerRegistry {
 public:
  /// Registry holding the c-family and english lexers.
  static const LexerRegistry& builtin();

  void add(std::unique_ptr<Lexer> lexer);
  const Lexer* find(std::string_view id) const;
  const Lexer& get(std::string_view id) const;  // throws UnknownLexer
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, std::unique_ptr<Lexer>, std::less<>> lexers_;
};

bool is_registered_lexer(std::string_view id);

/// Default comparison policy for a registered lexer.
ComparisonPolicy default_policy(std::string_view lexer_id);

TokenSequence tokenize(std::string_view source, std::string_view lexer_id,
                       const ComparisonPolicy& policy);

}  // namespace tokgrade

#endif  // TOKGRADE_LEXER_HPP
