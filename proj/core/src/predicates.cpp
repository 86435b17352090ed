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

#include "clcs/predicates.hpp"

namespace clcs {

bool is_subsequence(std::string_view needle, std::string_view haystack) noexcept {
  std::size_t matched = 0;
  for (char c : haystack) {
    if (matched == needle.size()) break;
    if (c == needle[matched]) ++matched;
  }
  return matched == needle.size();
}

bool is_substring(std::string_view needle, std::string_view haystack) noexcept {
  return haystack.find(needle) != std::string_view::npos;
}

std::size_t longest_q_prefix(std::string_view w, std::string_view q) noexcept {
  std::size_t r = 0;
  for (char c : w) {
    if (r == q.size()) break;
    if (c == q[r]) ++r;
  }
  return r;
}

std::size_t longest_q_suffix(std::string_view w, std::string_view q) noexcept {
  std::size_t r = 0;
  for (auto it = w.rbegin(); it != w.rend() && r < q.size(); ++it) {
    if (*it == q[q.size() - 1 - r]) ++r;
  }
  return r;
}

ValidationReport validate(const Instance& instance, std::string_view candidate) {
  ValidationReport report;
  report.is_common_subsequence = is_subsequence(candidate, instance.x()) &&
                                 is_subsequence(candidate, instance.y());
  report.includes_p_substring = is_substring(instance.p(), candidate);
  report.excludes_q_subsequence = !is_subsequence(instance.q(), candidate);
  report.length = candidate.size();
  return report;
}

}  // namespace clcs
