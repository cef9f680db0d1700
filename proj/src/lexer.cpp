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

#include "tokgrade/lexer.hpp"

namespace tokgrade {

TokenSequence Lexer::tokenize(std::string_view source,
                              const ComparisonPolicy& policy) const {
  TokenSequence seq;
  seq.source = std::string(source);
  seq.lexer_id = std::string(id());
  std::size_t pos = 0;
  while (auto token = next(source, pos, policy)) {
    token->index = seq.tokens.size();
    seq.tokens.push_back(std::move(*token));
  }
  return seq;
}

const LexerRegistry& LexerRegistry::builtin() {
  static const LexerRegistry registry = [] {
    LexerRegistry r;
    r.add(make_c_family_lexer());
    r.add(make_english_lexer());
    return r;
  }();
  return registry;
}

void LexerRegistry::add(std::unique_ptr<Lexer> lexer) {
  std::string key(lexer->id());
  lexers_[key] = std::move(lexer);
}

const Lexer* LexerRegistry::find(std::string_view id) const {
  auto it = lexers_.find(id);
  return it == lexers_.end() ? nullptr : it->second.get();
}

const Lexer& LexerRegistry::get(std::string_view id) const {
  const Lexer* lexer = find(id);
  if (lexer == nullptr) throw UnknownLexer(id);
  return *lexer;
}

std::vector<std::string> LexerRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : lexers_) out.push_back(id);
  return out;
}

bool is_registered_lexer(std::string_view id) {
  return LexerRegistry::builtin().find(id) != nullptr;
}

ComparisonPolicy default_policy(std::string_view lexer_id) {
  return LexerRegistry::builtin().get(lexer_id).default_policy();
}

TokenSequence tokenize(std::string_view source, std::string_view lexer_id,
                       const ComparisonPolicy& policy) {
  return LexerRegistry::builtin().get(lexer_id).tokenize(source, policy);
}

}  // namespace tokgrade
