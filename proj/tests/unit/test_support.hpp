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

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "clcs/types.hpp"

namespace clcs::testing {

/// Textbook O(nm) LCS length, kept separate from every library table.
inline int plain_lcs(std::string_view a, std::string_view b) {
  std::vector<int> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// Test-local generator, independent of the library's instance generator.
class RandomStrings {
 public:
  explicit RandomStrings(unsigned seed) : rng_(seed) {}

  std::string make(std::size_t min_len, std::size_t max_len, int sigma) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> sym(0, sigma - 1);
    std::string out(len(rng_), 'a');
    for (char& c : out) c = static_cast<char>('a' + sym(rng_));
    return out;
  }

  Instance instance(std::size_t max_nm, std::size_t max_s, std::size_t max_t,
                    int sigma) {
    return Instance(make(0, max_nm, sigma), make(0, max_nm, sigma),
                    make(1, max_s, sigma), make(1, max_t, sigma));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace clcs::testing
