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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "tokgrade/bank.hpp"

namespace tokgrade {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

const fs::path kBankDir = fs::path(TOKGRADE_SOURCE_DIR) / "data" / "bank";

json header_doc() { return question_to_json(testing::header_question(true)); }

std::string schema_error(const json& doc) {
  try {
    question_from_json(doc);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tokgrade-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
  }
};

TEST_CASE("question JSON round-trips") {
  const Question q = testing::header_question(true);
  CHECK(question_from_json(question_to_json(q)) == q);
  CHECK(question_from_json(json::parse(question_to_json(q).dump())) == q);
}

TEST_CASE("case_sensitive defaults to the lexer's convention") {
  json doc = {{"id", "en"},
              {"prompt", "p"},
              {"lexer", "english"},
              {"answers", {{{"text", "Hello there"}}}}};
  CHECK_FALSE(question_from_json(doc).policy.case_sensitive);
  doc["lexer"] = "c-family";
  CHECK(question_from_json(doc).policy.case_sensitive);
  doc["case_sensitive"] = false;
  CHECK_FALSE(question_from_json(doc).policy.case_sensitive);
}

TEST_CASE("schema errors name the offending field") {
  json doc = header_doc();
  doc["author"] = "me";
  CHECK(starts_with(schema_error(doc), "author: unknown field"));

  doc = header_doc();
  doc.erase("prompt");
  CHECK(starts_with(schema_error(doc), "prompt: required field is missing"));

  doc = header_doc();
  doc["id"] = 7;
  CHECK(starts_with(schema_error(doc), "id: expected a string"));

  doc = header_doc();
  doc["case_sensitive"] = "yes";
  CHECK(starts_with(schema_error(doc), "case_sensitive:"));

  doc = header_doc();
  doc["lexer"] = "klingon";
  CHECK(starts_with(schema_error(doc), "lexer:"));

  doc = header_doc();
  doc["answers"] = json::array();
  CHECK(starts_with(schema_error(doc), "answers:"));

  doc = header_doc();
  doc["answers"][0]["hint"] = "x";
  CHECK(starts_with(schema_error(doc), "answers[0].hint: unknown field"));

  doc = header_doc();
  doc["answers"][0]["descriptions"].erase(8);
  CHECK(starts_with(schema_error(doc), "answers[0].descriptions: expected 9"));

  doc = header_doc();
  doc["answers"][0]["descriptions"][3] = 1;
  CHECK(starts_with(schema_error(doc), "answers[0].descriptions[3]:"));

  doc = header_doc();
  doc["answers"][0]["text"] = "void f(\"";
  CHECK(starts_with(schema_error(doc), "answers[0].text:"));

  CHECK(starts_with(schema_error(json::array()), "$: expected an object"));
}

TEST_CASE("bundled bank loads") {
  const BankIndex bank = BankIndex::load_directory(kBankDir);
  CHECK(bank.size() == 3);
  const Question* q = bank.find("function-header");
  REQUIRE(q != nullptr);
  REQUIRE(q->answers.size() == 1);
  REQUIRE(q->answers[0].descriptions.has_value());
  CHECK(*q->answers[0].descriptions == testing::header_descriptions());
  CHECK(bank.find("english-question") != nullptr);
  CHECK(bank.find("nope") == nullptr);
}

TEST_CASE("bank directory errors") {
  TempDir dir;
  dir.write("a.json", question_to_json(testing::header_question(false)).dump());
  dir.write("b.json", question_to_json(testing::header_question(true)).dump());
  dir.write("notes.txt", "ignored");
  try {
    BankIndex::load_directory(dir.path);
    FAIL("expected duplicate id error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }

  TempDir broken;
  broken.write("x.json", "{ not json");
  CHECK_THROWS_AS(BankIndex::load_directory(broken.path), SchemaError);
  CHECK_THROWS_AS(BankIndex::load_directory(broken.path / "missing"),
                  SchemaError);

  TempDir empty;
  CHECK(BankIndex::load_directory(empty.path).size() == 0);
}

TEST_CASE("attempt JSON round-trips (property)") {
  std::mt19937_64 rng(1234);
  const Question q = testing::header_question(true);
  const std::vector<std::string> pieces{"void", "function", "(", "int", "abc",
                                        ",",    "def",      ")", "x",   ";"};
  for (int iter = 0; iter < 100; ++iter) {
    std::string response;
    for (std::size_t n = rng() % 12; n > 0; --n) {
      response += pieces[rng() % pieces.size()] + " ";
    }
    const GradedAttempt a = evaluate(q, response);
    const json doc = attempt_to_json(a);
    const GradedAttempt b = attempt_from_json(json::parse(doc.dump()));
    CHECK(b.question_id == a.question_id);
    CHECK(b.response_text == a.response_text);
    CHECK(b.chosen_answer_index == a.chosen_answer_index);
    CHECK(b.report.alignment == a.report.alignment);
    CHECK(b.report.counts == a.report.counts);
    CHECK(b.report.mistakes == a.report.mistakes);
    CHECK(b.report.grade == a.report.grade);
    CHECK(b.messages == a.messages);
    CHECK(b.timestamp == a.timestamp);
    CHECK(attempt_to_json(b) == doc);
  }
}

TEST_CASE("attempt schema rejects bad documents") {
  const GradedAttempt a =
      evaluate(testing::header_question(false), testing::kHeaderResponse);
  json doc = attempt_to_json(a);
  json bad = doc;
  bad["extra"] = 1;
  CHECK_THROWS_AS(attempt_from_json(bad), SchemaError);
  bad = doc;
  bad["report"]["mistakes"][0]["kind"] = "replaced";
  CHECK_THROWS_AS(attempt_from_json(bad), SchemaError);
  bad = doc;
  bad["grade"] = 0.5;
  CHECK_THROWS_AS(attempt_from_json(bad), SchemaError);
  bad = doc;
  bad["report"]["alignment"]["pairs"][0] = {1};
  CHECK_THROWS_AS(attempt_from_json(bad), SchemaError);
}

}  // namespace
}  // namespace tokgrade
