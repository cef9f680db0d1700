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

#include <string>
#include <vector>

#include "doctest.h"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/lexer_checks.hpp"
#include "tokgrade/lexer.hpp"

namespace tokgrade {
namespace {

std::vector<std::string> normalized(const TokenSequence& seq) {
  std::vector<std::string> out;
  for (const Token& t : seq.tokens) out.push_back(t.normalized);
  return out;
}

std::vector<std::string> lex(std::string_view src, std::string_view lexer) {
  return normalized(tokenize(src, lexer, default_policy(lexer)));
}

using V = std::vector<std::string>;

void check_well_formed(const TokenSequence& seq) {
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Token& t = seq[i];
    CHECK(t.index == i);
    CHECK(t.span.start < t.span.end);
    CHECK(t.span.start >= prev_end);
    CHECK_FALSE(t.normalized.empty());
    CHECK(seq.source.substr(t.span.start, t.span.size()) == t.raw);
    prev_end = t.span.end;
  }
}

TEST_CASE("registry") {
  CHECK(is_registered_lexer("c-family"));
  CHECK(is_registered_lexer("english"));
  CHECK_FALSE(is_registered_lexer("cobol"));
  CHECK_THROWS_AS(tokenize("x", "cobol", {}), UnknownLexer);
  CHECK(default_policy("c-family").case_sensitive);
  CHECK_FALSE(default_policy("english").case_sensitive);
  CHECK(LexerRegistry::builtin().ids() == V{"c-family", "english"});
}

TEST_CASE("c-family: function header lexes to nine tokens") {
  const TokenSequence seq =
      tokenize(testing::kHeaderAnswer, "c-family", {true});
  CHECK(normalized(seq) ==
        V{"void", "function", "(", "int", "abc", ",", "int", "def", ")"});
  CHECK(seq.size() == testing::header_descriptions().size());
  CHECK(seq[0].kind == TokenKind::kIdentifier);
  CHECK(seq[2].kind == TokenKind::kPunctuation);
  CHECK(seq.lexer_id == "c-family");
  check_well_formed(seq);
}

TEST_CASE("empty and blank input") {
  for (const char* lexer : {"c-family", "english"}) {
    CHECK(tokenize("", lexer, {true}).empty());
    CHECK(tokenize(" \t\n ", lexer, {true}).empty());
  }
  CHECK(tokenize("// only a comment", "c-family", {true}).empty());
}

TEST_CASE("c-family: operators use longest match") {
  CHECK(lex("a->b++ <<= c", "c-family") ==
        V{"a", "->", "b", "++", "<<", "=", "c"});
  CHECK(lex("x>>=y", "c-family") == V{"x", ">>", "=", "y"});
  CHECK(lex("a+++b", "c-family") == V{"a", "++", "+", "b"});
  CHECK(lex("p&&!q||r", "c-family") == V{"p", "&&", "!", "q", "||", "r"});
  CHECK(lex("a::b", "c-family") == V{"a", ":", ":", "b"});
}

TEST_CASE("c-family: numbers") {
  CHECK(lex("1.2.3", "c-family") == V{"1.2", ".", "3"});
  CHECK(lex("3.x", "c-family") == V{"3", ".", "x"});
  CHECK(lex("x=.5", "c-family") == V{"x", "=", ".", "5"});
  CHECK(lex("42abc", "c-family") == V{"42", "abc"});
  const TokenSequence seq = tokenize("3.14", "c-family", {true});
  REQUIRE(seq.size() == 1);
  CHECK(seq[0].kind == TokenKind::kNumberLiteral);
}

TEST_CASE("c-family: identifiers have no keyword table") {
  const TokenSequence seq = tokenize("int _x9 while", "c-family", {true});
  for (const Token& t : seq.tokens) CHECK(t.kind == TokenKind::kIdentifier);
}

TEST_CASE("c-family: string and char literals") {
  const TokenSequence seq =
      tokenize(R"(s = "a \"q\" b"; c = '\'';)", "c-family", {true});
  CHECK(normalized(seq) ==
        V{"s", "=", R"("a \"q\" b")", ";", "c", "=", R"('\'')", ";"});
  CHECK(seq[2].kind == TokenKind::kStringLiteral);
  CHECK(seq[6].kind == TokenKind::kStringLiteral);
  check_well_formed(seq);
}

TEST_CASE("c-family: comments are skipped") {
  CHECK(lex("int /* a */ x // b\n y", "c-family") == V{"int", "x", "y"});
  CHECK(lex("/**/a/***/b", "c-family") == V{"a", "b"});
  CHECK(lex("a*/b", "c-family") == V{"a", "*", "/", "b"});
}

TEST_CASE("c-family: lex errors carry positions") {
  const auto position_of = [](std::string_view src) -> std::size_t {
    try {
      tokenize(src, "c-family", {true});
    } catch (const LexError& e) {
      return e.position();
    }
    FAIL("expected LexError");
    return 0;
  };
  CHECK(position_of("\"unterminated") == 0);
  CHECK(position_of("x = 'a") == 4);
  CHECK(position_of("a /* never closed") == 2);
  CHECK(position_of("\"ends at \\\"") == 0);
  CHECK(position_of("\"line\nbreak\"") == 0);
}

TEST_CASE("c-family: unknown characters become single other tokens") {
  const TokenSequence seq = tokenize("a @ é", "c-family", {true});
  REQUIRE(seq.size() == 3);
  CHECK(seq[1].kind == TokenKind::kOther);
  CHECK(seq[2].kind == TokenKind::kOther);
  CHECK(seq[2].raw == "é");
  check_well_formed(seq);
}

TEST_CASE("c-family: case folding is opt-in") {
  CHECK(normalized(tokenize("Void F", "c-family", {true})) == V{"Void", "F"});
  CHECK(normalized(tokenize("Void F", "c-family", {false})) == V{"void", "f"});
}

TEST_CASE("english: words and punctuation") {
  CHECK(lex("The cat's mat, again.", "english") ==
        V{"the", "cat's", "mat", ",", "again", "."});
  CHECK(lex("a well-known fact", "english") == V{"a", "well-known", "fact"});
  CHECK(lex("'quoted' - dash", "english") ==
        V{"'", "quoted", "'", "-", "dash"});
  CHECK(lex("dogs' toys", "english") == V{"dogs", "'", "toys"});
  CHECK(lex("Wait\xE2\x80\x94what?!", "english") ==
        V{"wait", "\xE2\x80\x94", "what", "?", "!"});
  CHECK(lex("(\"Hi\"; ok:)", "english") ==
        V{"(", "\"", "hi", "\"", ";", "ok", ":", ")"});
}

TEST_CASE("english: kinds") {
  const TokenSequence seq = tokenize("In 2024, café & co", "english", {false});
  REQUIRE(seq.size() == 6);
  CHECK(seq[0].kind == TokenKind::kWord);
  CHECK(seq[1].kind == TokenKind::kNumberLiteral);
  CHECK(seq[2].kind == TokenKind::kPunctuation);
  CHECK(seq[3].raw == "café");
  CHECK(seq[3].kind == TokenKind::kWord);
  CHECK(seq[4].kind == TokenKind::kOther);
  check_well_formed(seq);
}

TEST_CASE("english: never throws") {
  const std::string junk = "\"unterminated /* \xFF\xFE @#$ \xC3";
  TokenSequence seq;
  CHECK_NOTHROW(seq = tokenize(junk, "english", {false}));
  check_well_formed(seq);
}

TEST_CASE("corpus: lossless positions, determinism, maximal munch") {
  const Lexer& lexer = LexerRegistry::builtin().get("c-family");
  const auto& corpus = testing::operator_corpus();
  REQUIRE(corpus.size() >= 50);
  for (const std::string& src : corpus) {
    CAPTURE(src);
    const TokenSequence seq = lexer.tokenize(src, {true});
    check_well_formed(seq);
    CHECK(normalized(lexer.tokenize(src, {true})) == normalized(seq));
    CHECK(testing::maximal_munch_violations(lexer, seq, {true}).empty());
    CHECK(testing::round_trips(lexer, seq, {true}));
  }
}

TEST_CASE("english: maximal munch on prose") {
  const Lexer& lexer = LexerRegistry::builtin().get("english");
  for (const char* src :
       {"The cat's mat, again.", "A well-known, state-of-the-art idea!",
        "She said: \"don't\" (twice) \xE2\x80\x94 no?", "rock'n'roll'"}) {
    CAPTURE(src);
    const TokenSequence seq = lexer.tokenize(src, {false});
    check_well_formed(seq);
    CHECK(testing::maximal_munch_violations(lexer, seq, {false}).empty());
  }
}

}  // namespace
}  // namespace tokgrade
