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

// On-disk formats: question files and the attempt log.
//
// A question file is one JSON object with exactly these fields:
//
//   {
//     "id": "function-header",
//     "prompt": "Write the header of ...",
//     "lexer": "c-family",
//     "case_sensitive": true,            // optional, lexer default if absent
//     "answers": [
//       {"text": "void function(int abc, int def)",
//        "descriptions": ["return value type", ...]}   // optional
//     ]
//   }
//
// Unknown fields are rejected. The attempt log is newline-delimited JSON,
// one GradedAttempt object per line.

#ifndef TOKGRADE_BANK_HPP
#define TOKGRADE_BANK_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tokgrade/grading.hpp"

namespace tokgrade {

/// A document that does not match the question or attempt schema. The
/// message starts with the path of the offending field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json question_to_json(const Question& question);

/// Parses and validates a question document.
Question question_from_json(const nlohmann::json& doc);

Question load_question_file(const std::filesystem::path& path);

nlohmann::json mistake_to_json(const Mistake& mistake);
nlohmann::json report_to_json(const MistakeReport& report);
nlohmann::json attempt_to_json(const GradedAttempt& attempt);
GradedAttempt attempt_from_json(const nlohmann::json& doc);

/// Read-only set of questions keyed by id.
class BankIndex {
 public:
  BankIndex() = default;

  /// Throws SchemaError on duplicate ids.
  static BankIndex from_questions(std::vector<Question> questions);

  /// Loads every *.json file in `dir` (non-recursive, sorted by name).
  static BankIndex load_directory(const std::filesystem::path& dir);

  const Question* find(std::string_view id) const;
  std::size_t size() const { return questions_.size(); }
  const std::map<std::string, Question, std::less<>>& questions() const {
    return questions_;
  }

 private:
  std::map<std::string, Question, std::less<>> questions_;
};

}  // namespace tokgrade

#endif  // TOKGRADE_BANK_HPP
