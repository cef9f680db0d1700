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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tokgrade/bank.hpp"
#include "tokgrade/grading.hpp"
#include "tokgrade/lexer.hpp"
#include "tokgrade/service.hpp"

namespace tokgrade::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

struct TokenizeArgs {
  std::string lexer;
  std::string text;
  std::string file;
  bool case_sensitive = false;
  bool case_insensitive = false;
};

int cmd_tokenize(const TokenizeArgs& a, std::ostream& out, std::ostream& err) {
  if (!is_registered_lexer(a.lexer)) {
    throw UsageError("unknown lexer \"" + a.lexer + "\"");
  }
  const std::string source = a.file.empty() ? a.text : read_file(a.file);
  ComparisonPolicy policy = default_policy(a.lexer);
  if (a.case_sensitive) policy.case_sensitive = true;
  if (a.case_insensitive) policy.case_sensitive = false;

  TokenSequence seq;
  try {
    seq = tokenize(source, a.lexer, policy);
  } catch (const LexError& e) {
    err << "lex error at offset " << e.position() << ": " << e.what() << "\n";
    return kLexError;
  }
  for (const Token& t : seq.tokens) {
    out << t.index << '\t' << to_string(t.kind) << '\t' << t.normalized
        << "\t[" << t.span.start << ',' << t.span.end << ")\n";
  }
  return kPerfect;
}

struct GradeArgs {
  std::string question;
  std::string response;
  std::string response_file;
  std::string format = "human";
};

int cmd_grade(const GradeArgs& a, std::ostream& out, std::ostream& err) {
  const Question question = load_question_file(a.question);
  const std::string response =
      a.response_file.empty() ? a.response : read_file(a.response_file);

  GradedAttempt attempt;
  try {
    attempt = evaluate(question, response);
  } catch (const LexError& e) {
    err << "lex error at offset " << e.position() << ": " << e.what() << "\n";
    return kLexError;
  }

  if (a.format == "json") {
    out << attempt_to_json(attempt).dump(2) << "\n";
  } else {
    out << "grade " << fixed4(attempt.report.grade) << "\n";
    for (std::size_t i = 0; i < attempt.messages.size(); ++i) {
      out << (i + 1) << ". " << attempt.messages[i] << "\n";
    }
  }
  return attempt.report.mistakes.empty() ? kPerfect : kImperfect;
}

struct BatchArgs {
  std::string question;
  std::string responses;
  std::string output;
  bool json_lines = false;
  unsigned jobs = 0;
};

json grade_line(const Question& question, const std::string& line,
                std::size_t line_no, bool json_lines, double& grade,
                bool& ok) {
  ok = false;
  std::string response = line;
  if (json_lines) {
    const json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("response") ||
        !doc["response"].is_string()) {
      return {{"line", line_no},
              {"error", "expected an object {\"response\": string}"}};
    }
    response = doc["response"].get<std::string>();
  }
  try {
    GradedAttempt attempt = evaluate(question, response);
    grade = attempt.report.grade;
    ok = true;
    return attempt_to_json(attempt);
  } catch (const LexError& e) {
    return {{"line", line_no}, {"error", e.what()}, {"position", e.position()}};
  } catch (const ResponseTooLong& e) {
    return {{"line", line_no}, {"error", e.what()}};
  }
}

int cmd_batch(const BatchArgs& a, std::ostream& out, std::ostream& err) {
  const Question question = load_question_file(a.question);
  const std::vector<std::string> lines = read_lines(a.responses);

  std::vector<json> records(lines.size());
  std::vector<double> grades(lines.size(), 0.0);
  std::vector<char> graded(lines.size(), 0);

  unsigned jobs = a.jobs != 0 ? a.jobs : std::thread::hardware_concurrency();
  jobs = std::clamp<unsigned>(jobs, 1, 64);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
          bool ok = false;
          records[i] = grade_line(question, lines[i], i + 1, a.json_lines,
                                  grades[i], ok);
          graded[i] = ok;
        }
      });
    }
  }

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + a.output);
  }
  std::ostream& sink = a.output.empty() ? out : file;
  std::size_t count = 0;
  std::size_t errors = 0;
  double total = 0.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    sink << records[i].dump() << "\n";
    if (graded[i]) {
      ++count;
      total += grades[i];
    } else {
      ++errors;
    }
  }
  const double mean = count == 0 ? 0.0 : total / static_cast<double>(count);
  err << "count " << count << ", mean grade " << fixed4(mean) << ", errors "
      << errors << "\n";
  return kPerfect;
}

int cmd_validate(const std::vector<std::string>& paths, std::ostream& out,
                 std::ostream& err) {
  int status = kPerfect;
  for (const std::string& p : paths) {
    try {
      if (std::filesystem::is_directory(p)) {
        const BankIndex bank = BankIndex::load_directory(p);
        out << "ok " << p << " (" << bank.size() << " questions)\n";
      } else {
        const Question q = load_question_file(p);
        out << "ok " << p << " (" << q.id << ")\n";
      }
    } catch (const SchemaError& e) {
      err << "invalid: " << e.what() << "\n";
      status = kUsage;
    }
  }
  return status;
}

struct ServeArgs {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string bank;
  std::string log;
  std::string ui_dir;
  std::string cors_origin;
};

int cmd_serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  ServiceOptions options;
  if (!a.log.empty()) options.log_path = a.log;
  if (!a.ui_dir.empty()) options.ui_dir = a.ui_dir;
  if (!a.cors_origin.empty()) options.cors_origin = a.cors_origin;

  Service service(BankIndex::load_directory(a.bank), std::move(options));
  out << "serving " << service.bank().size() << " questions on " << a.host
      << ":" << a.port << std::endl;
  if (!service.listen(a.host, a.port)) {
    err << "cannot listen on " << a.host << ":" << a.port << "\n";
    return kUsage;
  }
  return kPerfect;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Token-sequence grading for grammar exercises", "tokgrade"};
  app.require_subcommand(1);

  TokenizeArgs tok;
  auto* tokenize_cmd = app.add_subcommand("tokenize", "Print the tokens of a text");
  tokenize_cmd->add_option("--lexer", tok.lexer, "Lexer id (c-family, english)")
      ->required();
  auto* tok_text = tokenize_cmd->add_option("--text", tok.text, "Source text");
  auto* tok_file = tokenize_cmd->add_option("--file", tok.file, "Source file");
  tok_text->excludes(tok_file);
  auto* cs = tokenize_cmd->add_flag("--case-sensitive", tok.case_sensitive);
  auto* ci = tokenize_cmd->add_flag("--case-insensitive", tok.case_insensitive);
  cs->excludes(ci);

  GradeArgs grade;
  auto* grade_cmd = app.add_subcommand("grade", "Grade one response");
  grade_cmd->add_option("--question", grade.question, "Question file")
      ->required();
  auto* g_text = grade_cmd->add_option("--response", grade.response, "Response text");
  auto* g_file =
      grade_cmd->add_option("--response-file", grade.response_file, "Response file");
  g_text->excludes(g_file);
  grade_cmd->add_option("--format", grade.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "Grade one response per line");
  batch_cmd->add_option("--question", batch.question, "Question file")
      ->required();
  batch_cmd->add_option("--responses", batch.responses, "Responses file")
      ->required();
  batch_cmd->add_option("--output", batch.output, "NDJSON output (default stdout)");
  batch_cmd->add_flag("--json-lines", batch.json_lines,
                      "Each line is {\"response\": ...}");
  batch_cmd->add_option("--jobs", batch.jobs, "Worker threads");

  std::vector<std::string> validate_paths;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check question files or bank directories");
  validate_cmd->add_option("paths", validate_paths, "Files or directories")
      ->required();

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--port", serve.port, "Port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--bank", serve.bank, "Question bank directory")
      ->required();
  serve_cmd->add_option("--log", serve.log, "Attempt log (NDJSON, appended)");
  serve_cmd->add_option("--ui-dir", serve.ui_dir, "Static UI assets");
  serve_cmd->add_option("--cors-origin", serve.cors_origin,
                        "Allowed cross-origin for the API");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("tokgrade");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPerfect : kUsage;
  }

  try {
    if (*tokenize_cmd) {
      if (tok_text->count() == 0 && tok_file->count() == 0) {
        throw UsageError("tokenize: one of --text or --file is required");
      }
      return cmd_tokenize(tok, out, err);
    }
    if (*grade_cmd) {
      if (g_text->count() == 0 && g_file->count() == 0) {
        throw UsageError("grade: one of --response or --response-file is required");
      }
      return cmd_grade(grade, out, err);
    }
    if (*batch_cmd) return cmd_batch(batch, out, err);
    if (*validate_cmd) return cmd_validate(validate_paths, out, err);
    if (*serve_cmd) return cmd_serve(serve, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    err << "invalid question: " << e.what() << "\n";
  } catch (const ResponseTooLong& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace tokgrade::cli
