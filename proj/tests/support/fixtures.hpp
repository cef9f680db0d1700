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

#ifndef TOKGRADE_TESTS_FIXTURES_HPP
#define TOKGRADE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tokgrade/grading.hpp"
#include "tokgrade/token.hpp"

namespace tokgrade::testing {

inline constexpr const char* kHeaderAnswer = "void function(int abc, int def)";
inline constexpr const char* kHeaderResponse = "function int abc, int def, void";

/// Role labels for the nine tokens of kHeaderAnswer. The seventh entry is
/// "second argument type" for the token "int".
inline std::vector<std::string> header_descriptions() {
  return {"return value type",
          "function name",
          "opening bracket for arguments list",
          "first argument type",
          "first argument name",
          "argument list separator",
          "second argument type",
          "second argument name",
          "closing bracket for arguments list"};
}

inline Question header_question(bool with_descriptions) {
  Question q;
  q.id = "function-header";
  q.prompt = "Write the function header.";
  q.lexer = "c-family";
  q.policy = {true};
  ReferenceAnswer a{kHeaderAnswer, std::nullopt};
  if (with_descriptions) a.descriptions = header_descriptions();
  q.answers.push_back(std::move(a));
  return q;
}

/// Builds a sequence of one token per symbol, laid out as if the symbols
/// were separated by single spaces.
inline TokenSequence make_sequence(const std::vector<std::string>& symbols) {
  TokenSequence seq;
  seq.lexer_id = "test";
  std::size_t offset = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) {
      seq.source += ' ';
      ++offset;
    }
    Token t;
    t.kind = TokenKind::kOther;
    t.raw = symbols[i];
    t.normalized = symbols[i];
    t.span = {offset, offset + symbols[i].size()};
    t.index = i;
    seq.source += symbols[i];
    offset += symbols[i].size();
    seq.tokens.push_back(std::move(t));
  }
  return seq;
}

/// Random symbol string of length in [0, max_len] over the first
/// `alphabet` lowercase letters.
inline std::vector<std::string> random_symbols(std::mt19937_64& rng,
                                               std::size_t max_len,
                                               std::size_t alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet - 1);
  std::vector<std::string> out(len(rng));
  for (auto& s : out) s = std::string(1, static_cast<char>('a' + sym(rng)));
  return out;
}

/// `n` pairwise distinct symbols in random order.
inline std::vector<std::string> distinct_symbols(std::mt19937_64& rng,
                                                 std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = "t" + std::to_string(i);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace tokgrade::testing

#endif  // TOKGRADE_TESTS_FIXTURES_HPP
