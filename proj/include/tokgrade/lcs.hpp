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

#ifndef TOKGRADE_LCS_HPP
#define TOKGRADE_LCS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tokgrade/token.hpp"

namespace tokgrade {

/// Upper bound on tokens per sequence accepted by the grading pipeline.
inline constexpr std::size_t kMaxSequenceTokens = 10'000;

struct AlignedPair {
  std::size_t answer_index = 0;
  std::size_t response_index = 0;

  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

/// One longest common subsequence, as matched index pairs strictly
/// increasing in both coordinates.
struct Alignment {
  std::vector<AlignedPair> pairs;
  std::size_t answer_len = 0;
  std::size_t response_len = 0;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Maps each token to a dense integer id such that two tokens share an id
/// iff they are equal under `policy`. Ids are shared across both outputs.
struct InternedPair {
  std::vector<std::uint32_t> answer;
  std::vector<std::uint32_t> response;
};
InternedPair intern_tokens(const TokenSequence& answer,
                           const TokenSequence& response,
                           const ComparisonPolicy& policy);

/// Canonical LCS alignment over symbol ids.
///
/// Fills the full (|A|+1) x (|R|+1) length table, then walks back from the
/// bottom-right corner. A matching cell is always taken; otherwise the walk
/// moves up (drops an answer symbol) unless moving left is strictly better.
Alignment lcs_align(std::span<const std::uint32_t> answer,
                    std::span<const std::uint32_t> response);

Alignment lcs_align(const TokenSequence& answer, const TokenSequence& response,
                    const ComparisonPolicy& policy);

/// LCS length using a single rolling row over the shorter sequence.
std::size_t lcs_length(std::span<const std::uint32_t> answer,
                       std::span<const std::uint32_t> response);

std::size_t lcs_length(const TokenSequence& answer,
                       const TokenSequence& response,
                       const ComparisonPolicy& policy);

}  // namespace tokgrade

#endif  // TOKGRADE_LCS_HPP
