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

#ifndef TOKGRADE_MISTAKES_HPP
#define TOKGRADE_MISTAKES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokgrade/lcs.hpp"
#include "tokgrade/token.hpp"

namespace tokgrade {

/// Occurrence counts of one token value. `answer` and `response` count the
/// value in each sequence; `aligned` counts it among the LCS pairs.
struct ValueCounts {
  std::string value;
  std::size_t answer = 0;
  std::size_t response = 0;
  std::size_t aligned = 0;

  std::size_t placed() const { return aligned; }
  std::size_t misplaced() const { return std::min(answer, response) - aligned; }
  std::size_t missing() const { return answer > response ? answer - response : 0; }
  std::size_t extra() const { return response > answer ? response - answer : 0; }

  friend bool operator==(const ValueCounts&, const ValueCounts&) = default;
};

enum class MistakeKind { kMisplaced, kExtra, kMissing };

std::string_view to_string(MistakeKind kind);
std::optional<MistakeKind> mistake_kind_from_string(std::string_view name);

/// A single classified mistake tied to a concrete token occurrence.
///
/// Misplaced: response_index/span locate the student's token, answer_index
/// is the unaligned answer occurrence it stands in for.
/// Extra: response_index/span only.
/// Missing: answer_index only.
struct Mistake {
  MistakeKind kind = MistakeKind::kMissing;
  std::string value;
  std::optional<std::size_t> response_index;
  std::optional<Span> span;
  std::optional<std::size_t> answer_index;

  friend bool operator==(const Mistake&, const Mistake&) = default;
};

struct MistakeReport {
  Alignment alignment;
  std::vector<ValueCounts> counts;  // first appearance: answer, then response
  std::vector<Mistake> mistakes;    // misplaced, extra, then missing
  double grade = 0.0;

  std::size_t count(MistakeKind kind) const;
  const ValueCounts* counts_for(std::string_view value) const;
};

class AlignmentMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Classifies every unaligned token occurrence. Counting is per distinct
/// value; when a value has several unaligned occurrences they are assigned
/// left to right: the first unaligned response copies are misplaced and the
/// rest extra, the first unaligned answer copies pair with the misplaced
/// ones and the rest are missing.
///
/// Throws AlignmentMismatch if `alignment` is not a valid common
/// subsequence witness for the two sequences under `policy`.
MistakeReport classify(const TokenSequence& answer,
                       const TokenSequence& response,
                       const Alignment& alignment,
                       const ComparisonPolicy& policy);

}  // namespace tokgrade

#endif  // TOKGRADE_MISTAKES_HPP
