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

#include "tokgrade/grading.hpp"

#include <ctime>

#include "tokgrade/lcs.hpp"

namespace tokgrade {
namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  out += text;
  out += '"';
  return out;
}

std::string fill(std::string_view pattern, std::string_view name) {
  std::string out(pattern);
  const auto at = out.find("{name}");
  if (at != std::string::npos) out.replace(at, 6, name);
  return out;
}

std::string field(std::size_t answer_index, std::string_view name) {
  return "answers[" + std::to_string(answer_index) + "]." + std::string(name);
}

// grade as an exact fraction, for comparisons without rounding
struct Ratio {
  std::size_t num = 0;
  std::size_t den = 1;
};

Ratio grade_ratio(std::size_t lcs, std::size_t answer_len,
                  std::size_t response_len) {
  if (response_len == 0) return {0, 1};
  return {lcs, std::max(answer_len, response_len)};
}

// -1, 0 or 1 as a is below, equal to or above b
int compare(const Ratio& a, const Ratio& b) {
  const std::size_t lhs = a.num * b.den;
  const std::size_t rhs = b.num * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

ResponseTooLong::ResponseTooLong(std::size_t tokens)
    : std::invalid_argument("response has " + std::to_string(tokens) +
                            " tokens; the limit is " +
                            std::to_string(kMaxSequenceTokens)) {}

void validate_question(const Question& question) {
  if (question.id.empty()) throw InvalidQuestion("id: must be non-empty");
  if (!is_registered_lexer(question.lexer)) {
    throw InvalidQuestion("lexer: unknown lexer \"" + question.lexer + "\"");
  }
  if (question.answers.empty()) {
    throw InvalidQuestion("answers: at least one answer is required");
  }
  for (std::size_t i = 0; i < question.answers.size(); ++i) {
    const ReferenceAnswer& answer = question.answers[i];
    TokenSequence tokens;
    try {
      tokens = tokenize(answer.text, question.lexer, question.policy);
    } catch (const LexError& e) {
      throw InvalidQuestion(field(i, "text") + ": " + e.what() +
                            " at offset " + std::to_string(e.position()));
    }
    if (tokens.empty()) {
      throw InvalidQuestion(field(i, "text") + ": answer has no tokens");
    }
    if (tokens.size() > kMaxSequenceTokens) {
      throw InvalidQuestion(field(i, "text") + ": answer exceeds " +
                            std::to_string(kMaxSequenceTokens) + " tokens");
    }
    if (answer.descriptions &&
        answer.descriptions->size() != tokens.size()) {
      throw InvalidQuestion(field(i, "descriptions") + ": expected " +
                            std::to_string(tokens.size()) +
                            " entries (one per token), got " +
                            std::to_string(answer.descriptions->size()));
    }
  }
}

double grade_fraction(const MistakeReport& report, std::size_t answer_len,
                      std::size_t response_len) {
  const Ratio r =
      grade_ratio(report.alignment.pairs.size(), answer_len, response_len);
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

std::vector<std::string> render_messages(const MistakeReport& report,
                                         const ReferenceAnswer& chosen,
                                         const MessageTemplates& templates) {
  const auto name_of = [&](const Mistake& m) {
    if (chosen.descriptions && m.answer_index &&
        *m.answer_index < chosen.descriptions->size()) {
      return (*chosen.descriptions)[*m.answer_index];
    }
    return quoted(m.value);
  };

  std::vector<std::string> messages;
  messages.reserve(report.mistakes.size());
  for (const Mistake& m : report.mistakes) {
    switch (m.kind) {
      case MistakeKind::kMisplaced:
        messages.push_back(fill(templates.misplaced, name_of(m)));
        break;
      case MistakeKind::kMissing:
        messages.push_back(fill(templates.missing, name_of(m)));
        break;
      case MistakeKind::kExtra:
        messages.push_back(fill(templates.extra, quoted(m.value)));
        break;
    }
  }
  return messages;
}

GradedAttempt evaluate(const Question& question, std::string_view response_text,
                       std::chrono::system_clock::time_point now) {
  const TokenSequence response =
      tokenize(response_text, question.lexer, question.policy);
  if (response.size() > kMaxSequenceTokens) {
    throw ResponseTooLong(response.size());
  }

  GradedAttempt attempt;
  attempt.question_id = question.id;
  attempt.response_text = std::string(response_text);
  attempt.timestamp = format_rfc3339(now);

  bool have_best = false;
  Ratio best_grade;
  for (std::size_t i = 0; i < question.answers.size(); ++i) {
    const TokenSequence answer =
        tokenize(question.answers[i].text, question.lexer, question.policy);
    const Alignment alignment = lcs_align(answer, response, question.policy);
    MistakeReport report =
        classify(answer, response, alignment, question.policy);
    report.grade = grade_fraction(report, answer.size(), response.size());
    const Ratio grade =
        grade_ratio(alignment.pairs.size(), answer.size(), response.size());

    bool better = !have_best;
    if (have_best) {
      const int cmp = compare(grade, best_grade);
      better = cmp > 0 ||
               (cmp == 0 &&
                report.mistakes.size() < attempt.report.mistakes.size());
    }
    if (better) {
      have_best = true;
      best_grade = grade;
      attempt.chosen_answer_index = i;
      attempt.report = std::move(report);
    }
  }

  attempt.messages = render_messages(
      attempt.report, question.answers[attempt.chosen_answer_index]);
  return attempt;
}

std::string format_rfc3339(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace tokgrade
