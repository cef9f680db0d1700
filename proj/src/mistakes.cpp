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

#include "tokgrade/mistakes.hpp"

#include <unordered_map>

namespace tokgrade {
namespace {

void check_alignment(const TokenSequence& answer,
                     const TokenSequence& response, const Alignment& alignment,
                     const ComparisonPolicy& policy) {
  if (alignment.answer_len != answer.size() ||
      alignment.response_len != response.size()) {
    throw AlignmentMismatch("alignment lengths do not match the sequences");
  }
  const AlignedPair* prev = nullptr;
  for (const AlignedPair& p : alignment.pairs) {
    if (p.answer_index >= answer.size() ||
        p.response_index >= response.size()) {
      throw AlignmentMismatch("aligned index out of range");
    }
    if (prev != nullptr && (p.answer_index <= prev->answer_index ||
                            p.response_index <= prev->response_index)) {
      throw AlignmentMismatch("aligned pairs are not strictly increasing");
    }
    if (!tokens_equal(answer[p.answer_index], response[p.response_index],
                      policy)) {
      throw AlignmentMismatch("aligned tokens differ");
    }
    prev = &p;
  }
}

}  // namespace

std::string_view to_string(MistakeKind kind) {
  switch (kind) {
    case MistakeKind::kMisplaced:
      return "misplaced";
    case MistakeKind::kExtra:
      return "extra";
    case MistakeKind::kMissing:
      return "missing";
  }
  return "missing";
}

std::optional<MistakeKind> mistake_kind_from_string(std::string_view name) {
  if (name == "misplaced") return MistakeKind::kMisplaced;
  if (name == "extra") return MistakeKind::kExtra;
  if (name == "missing") return MistakeKind::kMissing;
  return std::nullopt;
}

std::size_t MistakeReport::count(MistakeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(mistakes.begin(), mistakes.end(),
                    [kind](const Mistake& m) { return m.kind == kind; }));
}

const ValueCounts* MistakeReport::counts_for(std::string_view value) const {
  for (const ValueCounts& c : counts) {
    if (c.value == value) return &c;
  }
  return nullptr;
}

MistakeReport classify(const TokenSequence& answer,
                       const TokenSequence& response,
                       const Alignment& alignment,
                       const ComparisonPolicy& policy) {
  check_alignment(answer, response, alignment, policy);

  MistakeReport report;
  report.alignment = alignment;

  struct Occurrences {
    std::vector<std::size_t> unaligned_answer;
    std::vector<std::size_t> unaligned_response;
  };
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<Occurrences> occurrences;
  const auto slot_of = [&](const Token& t) {
    auto [it, inserted] =
        slot.try_emplace(comparison_key(t, policy), report.counts.size());
    if (inserted) {
      report.counts.push_back(ValueCounts{it->first, 0, 0, 0});
      occurrences.emplace_back();
    }
    return it->second;
  };

  std::vector<bool> answer_aligned(answer.size(), false);
  std::vector<bool> response_aligned(response.size(), false);
  for (const AlignedPair& p : alignment.pairs) {
    answer_aligned[p.answer_index] = true;
    response_aligned[p.response_index] = true;
  }

  for (std::size_t i = 0; i < answer.size(); ++i) {
    const std::size_t s = slot_of(answer[i]);
    ++report.counts[s].answer;
    if (answer_aligned[i]) {
      ++report.counts[s].aligned;
    } else {
      occurrences[s].unaligned_answer.push_back(i);
    }
  }
  for (std::size_t j = 0; j < response.size(); ++j) {
    const std::size_t s = slot_of(response[j]);
    ++report.counts[s].response;
    if (!response_aligned[j]) occurrences[s].unaligned_response.push_back(j);
  }

  std::vector<Mistake> misplaced;
  std::vector<Mistake> extra;
  std::vector<Mistake> missing;
  for (std::size_t s = 0; s < report.counts.size(); ++s) {
    const ValueCounts& c = report.counts[s];
    const Occurrences& occ = occurrences[s];
    const std::size_t n_misplaced = c.misplaced();
    for (std::size_t k = 0; k < occ.unaligned_response.size(); ++k) {
      const std::size_t r = occ.unaligned_response[k];
      Mistake m;
      m.value = c.value;
      m.response_index = r;
      m.span = response[r].span;
      if (k < n_misplaced) {
        m.kind = MistakeKind::kMisplaced;
        m.answer_index = occ.unaligned_answer[k];
        misplaced.push_back(std::move(m));
      } else {
        m.kind = MistakeKind::kExtra;
        extra.push_back(std::move(m));
      }
    }
    for (std::size_t k = n_misplaced; k < occ.unaligned_answer.size(); ++k) {
      Mistake m;
      m.kind = MistakeKind::kMissing;
      m.value = c.value;
      m.answer_index = occ.unaligned_answer[k];
      missing.push_back(std::move(m));
    }
  }

  const auto by_response = [](const Mistake& a, const Mistake& b) {
    return *a.response_index < *b.response_index;
  };
  std::sort(misplaced.begin(), misplaced.end(), by_response);
  std::sort(extra.begin(), extra.end(), by_response);
  std::sort(missing.begin(), missing.end(),
            [](const Mistake& a, const Mistake& b) {
              return *a.answer_index < *b.answer_index;
            });

  report.mistakes = std::move(misplaced);
  report.mistakes.insert(report.mistakes.end(),
                         std::make_move_iterator(extra.begin()),
                         std::make_move_iterator(extra.end()));
  report.mistakes.insert(report.mistakes.end(),
                         std::make_move_iterator(missing.begin()),
                         std::make_move_iterator(missing.end()));
  return report;
}

}  // namespace tokgrade
