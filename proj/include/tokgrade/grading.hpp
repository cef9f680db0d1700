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

#ifndef TOKGRADE_GRADING_HPP
#define TOKGRADE_GRADING_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokgrade/lexer.hpp"
#include "tokgrade/mistakes.hpp"
#include "tokgrade/token.hpp"

namespace tokgrade {

/// One teacher-entered correct answer. When present, `descriptions` holds one
/// grammatical role label per token of the lexed text.
struct ReferenceAnswer {
  std::string text;
  std::optional<std::vector<std::string>> descriptions;

  friend bool operator==(const ReferenceAnswer&,
                         const ReferenceAnswer&) = default;
};

struct Question {
  std::string id;
  std::string prompt;
  std::string lexer;
  ComparisonPolicy policy;
  std::vector<ReferenceAnswer> answers;

  friend bool operator==(const Question&, const Question&) = default;
};

/// Raised for questions that break the model's invariants.
class InvalidQuestion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a response exceeds kMaxSequenceTokens.
class ResponseTooLong : public std::invalid_argument {
 public:
  explicit ResponseTooLong(std::size_t tokens);
};

/// Checks id, answers, lexer registration, that every answer lexes, and
/// description counts. Throws InvalidQuestion naming the offending field.
void validate_question(const Question& question);

struct GradedAttempt {
  std::string question_id;
  std::string response_text;
  std::size_t chosen_answer_index = 0;
  MistakeReport report;
  std::vector<std::string> messages;
  std::string timestamp;  // RFC 3339, UTC
};

/// |LCS| / max(|answer|, |response|); zero for an empty response.
double grade_fraction(const MistakeReport& report, std::size_t answer_len,
                      std::size_t response_len);

/// Message wording. Kept in one place so it can be swapped for another
/// language.
struct MessageTemplates {
  std::string misplaced = "{name} is misplaced";
  std::string missing = "{name} is missing";
  std::string extra = "there is extra {name}";
};

/// Misplaced and missing mistakes name the answer token by its description
/// when the answer has them; extra mistakes always quote the token text.
std::vector<std::string> render_messages(
    const MistakeReport& report, const ReferenceAnswer& chosen,
    const MessageTemplates& templates = {});

/// Grades `response_text` against every reference answer and keeps the best:
/// highest grade, then fewest mistakes, then lowest answer index.
/// Throws LexError if the response does not lex and ResponseTooLong if it has
/// more than kMaxSequenceTokens tokens.
GradedAttempt evaluate(const Question& question, std::string_view response_text,
                       std::chrono::system_clock::time_point now =
                           std::chrono::system_clock::now());

std::string format_rfc3339(std::chrono::system_clock::time_point t);

}  // namespace tokgrade

#endif  // TOKGRADE_GRADING_HPP
