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

#include "tokgrade/service.hpp"

#include <iostream>

#include "httplib.h"

namespace tokgrade {
namespace {

using nlohmann::json;

ApiResponse error(int status, std::string message) {
  return {status, {{"error", std::move(message)}}};
}

void send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

AttemptLog::AttemptLog(const std::filesystem::path& path)
    : out_(path, std::ios::app | std::ios::binary) {
  if (!out_) {
    throw std::runtime_error("cannot open attempt log " + path.string());
  }
}

void AttemptLog::append(const GradedAttempt& attempt) {
  const std::string line = attempt_to_json(attempt).dump() + "\n";
  std::lock_guard lock(mu_);
  out_ << line;
  out_.flush();
}

json attempt_payload(const GradedAttempt& attempt, const Question& question) {
  const ReferenceAnswer& chosen = question.answers[attempt.chosen_answer_index];
  json mistakes = json::array();
  for (const Mistake& m : attempt.report.mistakes) {
    json item = {{"kind", to_string(m.kind)}, {"value", m.value}};
    if (m.span) {
      item["span"] = {{"start", m.span->start}, {"end", m.span->end}};
    }
    // A missing token has no response text to show; report it the way its
    // message names it.
    if (m.kind == MistakeKind::kMissing && chosen.descriptions &&
        m.answer_index && *m.answer_index < chosen.descriptions->size()) {
      item["value"] = (*chosen.descriptions)[*m.answer_index];
    }
    mistakes.push_back(std::move(item));
  }
  return {{"grade", attempt.report.grade},
          {"messages", attempt.messages},
          {"mistakes", std::move(mistakes)},
          {"chosen_answer_index", attempt.chosen_answer_index}};
}

ApiResponse handle_health(const BankIndex& bank) {
  return {200, {{"status", "ok"}, {"questions", bank.size()}}};
}

ApiResponse handle_list_questions(const BankIndex& bank) {
  json out = json::array();
  for (const auto& [id, q] : bank.questions()) {
    out.push_back({{"id", q.id}, {"prompt", q.prompt}, {"lexer", q.lexer}});
  }
  return {200, std::move(out)};
}

ApiResponse handle_attempt(const BankIndex& bank, std::string_view id,
                           std::string_view body, AttemptLog* log) {
  const Question* question = bank.find(id);
  if (question == nullptr) {
    return error(404, "unknown question \"" + std::string(id) + "\"");
  }

  const json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return error(400, "body is not valid JSON");
  if (!doc.is_object()) return error(400, "body must be a JSON object");
  const auto it = doc.find("response");
  if (it == doc.end()) return error(400, "response: required field is missing");
  if (!it->is_string()) return error(400, "response: expected a string");

  GradedAttempt attempt;
  try {
    attempt = evaluate(*question, it->get<std::string>());
  } catch (const LexError& e) {
    return {422, {{"error", e.what()}, {"position", e.position()}}};
  } catch (const ResponseTooLong& e) {
    return error(400, e.what());
  }

  if (log != nullptr) log->append(attempt);
  return {200, attempt_payload(attempt, *question)};
}

struct Service::Impl {
  httplib::Server server;
};

Service::Service(BankIndex bank, ServiceOptions options)
    : bank_(std::move(bank)),
      options_(std::move(options)),
      impl_(std::make_unique<Impl>()) {
  if (options_.log_path) log_ = std::make_unique<AttemptLog>(*options_.log_path);

  httplib::Server& srv = impl_->server;
  srv.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) {
    send(res, handle_health(bank_));
  });
  srv.Get("/api/questions",
          [this](const httplib::Request&, httplib::Response& res) {
            send(res, handle_list_questions(bank_));
          });
  srv.Post(R"(/api/questions/([^/]+)/attempts)",
           [this](const httplib::Request& req, httplib::Response& res) {
             send(res, handle_attempt(bank_, req.matches[1].str(), req.body,
                                      log_.get()));
           });

  if (options_.cors_origin) {
    const std::string origin = *options_.cors_origin;
    srv.Options(R"(/api/.*)",
                [](const httplib::Request&, httplib::Response& res) {
                  res.status = 204;
                });
    srv.set_post_routing_handler(
        [origin](const httplib::Request&, httplib::Response& res) {
          res.set_header("Access-Control-Allow-Origin", origin);
          res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
          res.set_header("Access-Control-Allow-Headers", "Content-Type");
        });
  }

  if (options_.ui_dir) {
    if (!srv.set_mount_point("/", options_.ui_dir->string())) {
      throw std::runtime_error("cannot serve UI from " +
                               options_.ui_dir->string());
    }
  }

  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                               std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    std::cerr << "tokgrade: request failed: " << what << "\n";
    send(res, error(500, "internal error"));
  });
}

Service::~Service() { stop(); }

bool Service::listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int Service::bind_to_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace tokgrade
