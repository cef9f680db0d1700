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

// HTTP API:
//
//   GET  /api/health                    -> {status, questions}
//   GET  /api/questions                 -> [{id, prompt, lexer}]
//   POST /api/questions/{id}/attempts   body {response}
//        200 {grade, messages, mistakes:[{kind, value, span?}],
//             chosen_answer_index}
//        400 malformed body, 404 unknown id, 422 {error, position} on a
//        lex error
//
// Reference answers are never serialized. The only answer-derived text in a
// payload is what the rendered messages already show.

#ifndef TOKGRADE_SERVICE_HPP
#define TOKGRADE_SERVICE_HPP

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tokgrade/bank.hpp"
#include "tokgrade/grading.hpp"

namespace tokgrade {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Append-only NDJSON attempt log. Safe to share between request threads;
/// each attempt is written as one line under a lock.
class AttemptLog {
 public:
  explicit AttemptLog(const std::filesystem::path& path);
  void append(const GradedAttempt& attempt);

 private:
  std::mutex mu_;
  std::ofstream out_;
};

/// Student-facing view of a graded attempt.
nlohmann::json attempt_payload(const GradedAttempt& attempt,
                               const Question& question);

ApiResponse handle_health(const BankIndex& bank);
ApiResponse handle_list_questions(const BankIndex& bank);
ApiResponse handle_attempt(const BankIndex& bank, std::string_view id,
                           std::string_view body, AttemptLog* log);

struct ServiceOptions {
  std::optional<std::filesystem::path> log_path;
  std::optional<std::filesystem::path> ui_dir;
  std::optional<std::string> cors_origin;
};

class Service {
 public:
  Service(BankIndex bank, ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds and serves until stop(). Returns false if binding fails.
  bool listen(const std::string& host, int port);

  /// Binds to an ephemeral port and returns it, or -1.
  int bind_to_any_port(const std::string& host);
  /// Serves on a socket bound by bind_to_any_port until stop().
  bool listen_after_bind();

  void wait_until_ready() const;
  void stop();

  const BankIndex& bank() const { return bank_; }

 private:
  struct Impl;

  BankIndex bank_;
  ServiceOptions options_;
  std::unique_ptr<AttemptLog> log_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tokgrade

#endif  // TOKGRADE_SERVICE_HPP
