// Copyright 2026 The clcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string_view>

#include "clcs/types.hpp"

namespace clcs {

/// True iff `needle` embeds into `haystack` by a strictly increasing index
/// map. Single greedy left-to-right scan.
bool is_subsequence(std::string_view needle, std::string_view haystack) noexcept;

/// True iff `needle` occurs contiguously in `haystack`.
bool is_substring(std::string_view needle, std::string_view haystack) noexcept;

/// Largest r in [0, |q|] such that q[1:r] is a subsequence of `w`.
std::size_t longest_q_prefix(std::string_view w, std::string_view q) noexcept;

/// Largest r in [0, |q|] such that the last r symbols of q form a
/// subsequence of `w` (right-to-left greedy scan). Mirror of
/// longest_q_prefix, used for the suffix-exclusion table.
std::size_t longest_q_suffix(std::string_view w, std::string_view q) noexcept;

struct ValidationReport {
  bool is_common_subsequence = false;
  bool includes_p_substring = false;
  bool excludes_q_subsequence = false;
  std::size_t length = 0;

  bool valid() const noexcept {
    return is_common_subsequence && includes_p_substring &&
           excludes_q_subsequence;
  }
};

/// Checks a candidate answer directly against the problem definition.
ValidationReport validate(const Instance& instance, std::string_view candidate);

}  // namespace clcs
