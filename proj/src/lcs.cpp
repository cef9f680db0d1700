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

#include "tokgrade/lcs.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace tokgrade {

InternedPair intern_tokens(const TokenSequence& answer,
                           const TokenSequence& response,
                           const ComparisonPolicy& policy) {
  std::unordered_map<std::string, std::uint32_t> ids;
  const auto intern = [&](const TokenSequence& seq) {
    std::vector<std::uint32_t> out;
    out.reserve(seq.size());
    for (const Token& t : seq.tokens) {
      auto [it, _] = ids.try_emplace(comparison_key(t, policy),
                                     static_cast<std::uint32_t>(ids.size()));
      out.push_back(it->second);
    }
    return out;
  };
  InternedPair result;
  result.answer = intern(answer);
  result.response = intern(response);
  return result;
}

Alignment lcs_align(std::span<const std::uint32_t> answer,
                    std::span<const std::uint32_t> response) {
  const std::size_t n = answer.size();
  const std::size_t m = response.size();
  const std::size_t stride = m + 1;

  // table[i * stride + j] = LCS length of answer[0, i) and response[0, j).
  std::vector<std::uint32_t> table((n + 1) * stride, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint32_t* row = &table[i * stride];
    const std::uint32_t* up = &table[(i - 1) * stride];
    for (std::size_t j = 1; j <= m; ++j) {
      row[j] = answer[i - 1] == response[j - 1] ? up[j - 1] + 1
                                                : std::max(up[j], row[j - 1]);
    }
  }

  Alignment alignment;
  alignment.answer_len = n;
  alignment.response_len = m;
  alignment.pairs.reserve(table[n * stride + m]);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    if (answer[i - 1] == response[j - 1]) {
      alignment.pairs.push_back({i - 1, j - 1});
      --i;
      --j;
    } else if (table[(i - 1) * stride + j] >= table[i * stride + j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(alignment.pairs.begin(), alignment.pairs.end());
  return alignment;
}

Alignment lcs_align(const TokenSequence& answer, const TokenSequence& response,
                    const ComparisonPolicy& policy) {
  const InternedPair ids = intern_tokens(answer, response, policy);
  return lcs_align(ids.answer, ids.response);
}

std::size_t lcs_length(std::span<const std::uint32_t> answer,
                       std::span<const std::uint32_t> response) {
  std::span<const std::uint32_t> outer = answer;
  std::span<const std::uint32_t> inner = response;
  if (inner.size() > outer.size()) std::swap(outer, inner);

  std::vector<std::uint32_t> row(inner.size() + 1, 0);
  for (std::uint32_t symbol : outer) {
    std::uint32_t diagonal = 0;  // previous row, column j - 1
    for (std::size_t j = 1; j <= inner.size(); ++j) {
      const std::uint32_t above = row[j];
      row[j] = symbol == inner[j - 1] ? diagonal + 1 : std::max(above, row[j - 1]);
      diagonal = above;
    }
  }
  return row[inner.size()];
}

std::size_t lcs_length(const TokenSequence& answer,
                       const TokenSequence& response,
                       const ComparisonPolicy& policy) {
  const InternedPair ids = intern_tokens(answer, response, policy);
  return lcs_length(ids.answer, ids.response);
}

}  // namespace tokgrade
