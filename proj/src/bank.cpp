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

#include "tokgrade/bank.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace tokgrade {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

std::string join(const std::string& parent, std::string_view key) {
  return parent.empty() ? std::string(key) : parent + "." + std::string(key);
}

std::string at(const std::string& parent, std::size_t i) {
  return parent + "[" + std::to_string(i) + "]";
}

void require_object(const json& doc, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!doc.is_object()) fail(path.empty() ? "$" : path, "expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(join(path, key), "unknown field");
    }
  }
}

const json& member(const json& doc, const std::string& path,
                   std::string_view key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(join(path, key), "required field is missing");
  return *it;
}

std::string get_string(const json& doc, const std::string& path,
                       std::string_view key) {
  const json& v = member(doc, path, key);
  if (!v.is_string()) fail(join(path, key), "expected a string");
  return v.get<std::string>();
}

std::size_t get_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t get_index(const json& doc, const std::string& path,
                      std::string_view key) {
  return get_index(member(doc, path, key), join(path, key));
}

const json& get_array(const json& doc, const std::string& path,
                      std::string_view key) {
  const json& v = member(doc, path, key);
  if (!v.is_array()) fail(join(path, key), "expected an array");
  return v;
}

Span span_from_json(const json& doc, const std::string& path) {
  require_object(doc, path, {"start", "end"});
  Span s{get_index(doc, path, "start"), get_index(doc, path, "end")};
  if (s.start > s.end) fail(path, "start is after end");
  return s;
}

Mistake mistake_from_json(const json& doc, const std::string& path) {
  require_object(doc, path,
                 {"kind", "value", "response_index", "span", "answer_index"});
  Mistake m;
  const std::string kind = get_string(doc, path, "kind");
  const auto parsed = mistake_kind_from_string(kind);
  if (!parsed) fail(join(path, "kind"), "unknown mistake kind \"" + kind + "\"");
  m.kind = *parsed;
  m.value = get_string(doc, path, "value");
  if (doc.contains("response_index")) {
    m.response_index = get_index(doc, path, "response_index");
  }
  if (doc.contains("span")) {
    m.span = span_from_json(doc.at("span"), join(path, "span"));
  }
  if (doc.contains("answer_index")) {
    m.answer_index = get_index(doc, path, "answer_index");
  }
  return m;
}

MistakeReport report_from_json(const json& doc, const std::string& path) {
  require_object(doc, path, {"alignment", "counts", "mistakes", "grade"});
  MistakeReport report;

  const std::string apath = join(path, "alignment");
  const json& a = member(doc, path, "alignment");
  require_object(a, apath, {"answer_len", "response_len", "pairs"});
  report.alignment.answer_len = get_index(a, apath, "answer_len");
  report.alignment.response_len = get_index(a, apath, "response_len");
  const json& pairs = get_array(a, apath, "pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string ppath = at(join(apath, "pairs"), i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) {
      fail(ppath, "expected [answer_index, response_index]");
    }
    report.alignment.pairs.push_back(
        {get_index(pairs[i][0], ppath), get_index(pairs[i][1], ppath)});
  }

  const json& counts = get_array(doc, path, "counts");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::string cpath = at(join(path, "counts"), i);
    require_object(counts[i], cpath,
                   {"value", "answer", "response", "aligned", "placed",
                    "misplaced", "missing", "extra"});
    ValueCounts c;
    c.value = get_string(counts[i], cpath, "value");
    c.answer = get_index(counts[i], cpath, "answer");
    c.response = get_index(counts[i], cpath, "response");
    c.aligned = get_index(counts[i], cpath, "aligned");
    if (c.aligned > std::min(c.answer, c.response)) {
      fail(cpath, "aligned exceeds min(answer, response)");
    }
    report.counts.push_back(std::move(c));
  }

  const json& mistakes = get_array(doc, path, "mistakes");
  for (std::size_t i = 0; i < mistakes.size(); ++i) {
    report.mistakes.push_back(
        mistake_from_json(mistakes[i], at(join(path, "mistakes"), i)));
  }

  const json& grade = member(doc, path, "grade");
  if (!grade.is_number()) fail(join(path, "grade"), "expected a number");
  report.grade = grade.get<double>();
  return report;
}

}  // namespace

json question_to_json(const Question& question) {
  json answers = json::array();
  for (const ReferenceAnswer& a : question.answers) {
    json entry = {{"text", a.text}};
    if (a.descriptions) entry["descriptions"] = *a.descriptions;
    answers.push_back(std::move(entry));
  }
  return {{"id", question.id},
          {"prompt", question.prompt},
          {"lexer", question.lexer},
          {"case_sensitive", question.policy.case_sensitive},
          {"answers", std::move(answers)}};
}

Question question_from_json(const json& doc) {
  require_object(doc, "",
                 {"id", "prompt", "lexer", "case_sensitive", "answers"});
  Question q;
  q.id = get_string(doc, "", "id");
  if (q.id.empty()) fail("id", "must be non-empty");
  q.prompt = get_string(doc, "", "prompt");
  q.lexer = get_string(doc, "", "lexer");
  if (!is_registered_lexer(q.lexer)) {
    fail("lexer", "unknown lexer \"" + q.lexer + "\"");
  }
  q.policy = default_policy(q.lexer);
  if (doc.contains("case_sensitive")) {
    const json& cs = doc.at("case_sensitive");
    if (!cs.is_boolean()) fail("case_sensitive", "expected a boolean");
    q.policy.case_sensitive = cs.get<bool>();
  }

  const json& answers = get_array(doc, "", "answers");
  if (answers.empty()) fail("answers", "at least one answer is required");
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const std::string path = at("answers", i);
    require_object(answers[i], path, {"text", "descriptions"});
    ReferenceAnswer a;
    a.text = get_string(answers[i], path, "text");
    if (answers[i].contains("descriptions")) {
      const json& d = answers[i].at("descriptions");
      const std::string dpath = join(path, "descriptions");
      if (!d.is_array()) fail(dpath, "expected an array of strings");
      std::vector<std::string> descriptions;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (!d[k].is_string()) fail(at(dpath, k), "expected a string");
        descriptions.push_back(d[k].get<std::string>());
      }
      a.descriptions = std::move(descriptions);
    }
    q.answers.push_back(std::move(a));
  }

  try {
    validate_question(q);
  } catch (const InvalidQuestion& e) {
    throw SchemaError(e.what());
  }
  return q;
}

Question load_question_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": invalid JSON: " + e.what());
  }
  try {
    return question_from_json(doc);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

json mistake_to_json(const Mistake& m) {
  json out = {{"kind", to_string(m.kind)}, {"value", m.value}};
  if (m.response_index) out["response_index"] = *m.response_index;
  if (m.span) out["span"] = {{"start", m.span->start}, {"end", m.span->end}};
  if (m.answer_index) out["answer_index"] = *m.answer_index;
  return out;
}

json report_to_json(const MistakeReport& report) {
  json pairs = json::array();
  for (const AlignedPair& p : report.alignment.pairs) {
    pairs.push_back({p.answer_index, p.response_index});
  }
  json counts = json::array();
  for (const ValueCounts& c : report.counts) {
    counts.push_back({{"value", c.value},
                      {"answer", c.answer},
                      {"response", c.response},
                      {"aligned", c.aligned},
                      {"placed", c.placed()},
                      {"misplaced", c.misplaced()},
                      {"missing", c.missing()},
                      {"extra", c.extra()}});
  }
  json mistakes = json::array();
  for (const Mistake& m : report.mistakes) mistakes.push_back(mistake_to_json(m));
  return {{"alignment",
           {{"answer_len", report.alignment.answer_len},
            {"response_len", report.alignment.response_len},
            {"pairs", std::move(pairs)}}},
          {"counts", std::move(counts)},
          {"mistakes", std::move(mistakes)},
          {"grade", report.grade}};
}

json attempt_to_json(const GradedAttempt& attempt) {
  return {{"question_id", attempt.question_id},
          {"response_text", attempt.response_text},
          {"chosen_answer_index", attempt.chosen_answer_index},
          {"grade", attempt.report.grade},
          {"report", report_to_json(attempt.report)},
          {"messages", attempt.messages},
          {"timestamp", attempt.timestamp}};
}

GradedAttempt attempt_from_json(const json& doc) {
  require_object(doc, "",
                 {"question_id", "response_text", "chosen_answer_index",
                  "grade", "report", "messages", "timestamp"});
  GradedAttempt a;
  a.question_id = get_string(doc, "", "question_id");
  a.response_text = get_string(doc, "", "response_text");
  a.chosen_answer_index = get_index(doc, "", "chosen_answer_index");
  a.report = report_from_json(member(doc, "", "report"), "report");
  const json& grade = member(doc, "", "grade");
  if (!grade.is_number() || grade.get<double>() != a.report.grade) {
    fail("grade", "must equal report.grade");
  }
  const json& messages = get_array(doc, "", "messages");
  for (std::size_t i = 0; i < messages.size(); ++i) {
    if (!messages[i].is_string()) fail(at("messages", i), "expected a string");
    a.messages.push_back(messages[i].get<std::string>());
  }
  a.timestamp = get_string(doc, "", "timestamp");
  return a;
}

BankIndex BankIndex::from_questions(std::vector<Question> questions) {
  BankIndex bank;
  for (Question& q : questions) {
    const std::string id = q.id;
    if (!bank.questions_.emplace(id, std::move(q)).second) {
      throw SchemaError("id: duplicate question id \"" + id + "\"");
    }
  }
  return bank;
}

BankIndex BankIndex::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw SchemaError(dir.string() + ": not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<Question> questions;
  for (const auto& f : files) questions.push_back(load_question_file(f));
  return from_questions(std::move(questions));
}

const Question* BankIndex::find(std::string_view id) const {
  auto it = questions_.find(id);
  return it == questions_.end() ? nullptr : &it->second;
}

}  // namespace tokgrade
