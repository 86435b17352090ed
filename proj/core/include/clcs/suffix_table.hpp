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
#include <cstdint>
#include <string>
#include <vector>

#include "clcs/types.hpp"

namespace clcs {

/// f(i, j, k, r): the longest common subsequence of X[1:i] and Y[1:j] that
/// ends with P[1:k] and does not contain Q[1:r] as a subsequence. k = 0
/// drops the suffix requirement and r = 0 drops the exclusion. Cells with
/// no valid string hold NEG_INF.
///
/// Stored densely, row-major in (i, j, k, r).
class SuffixTable {
 public:
  SuffixTable(std::size_t n, std::size_t m, std::size_t s, std::size_t t);

  ExtLen at(std::size_t i, std::size_t j, std::size_t k, std::size_t r) const {
    return cells_[index(i, j, k, r)];
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t s() const noexcept { return s_; }
  std::size_t t() const noexcept { return t_; }

  /// Number of interior cells written by the builder: n*m*(s+1)*(t+1).
  std::uint64_t update_count() const noexcept { return update_count_; }

  static std::size_t cell_count(std::size_t n, std::size_t m, std::size_t s,
                                std::size_t t) {
    return checked_cells({n + 1, m + 1, s + 1, t + 1});
  }

 private:
  friend SuffixTable build_suffix_table(const Instance&, std::size_t);

  std::size_t index(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t r) const noexcept {
    return ((i * (m_ + 1) + j) * (s_ + 1) + k) * (t_ + 1) + r;
  }
  ExtLen& ref(std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
    return cells_[index(i, j, k, r)];
  }

  std::size_t n_, m_, s_, t_;
  std::vector<ExtLen> cells_;
  std::uint64_t update_count_ = 0;
};

/// Fills every cell of f. Boundary rows and columns are 0 when k = 0 (for
/// every r) and NEG_INF when k >= 1. Throws CapacityError when the table
/// exceeds `memory_budget` bytes.
SuffixTable build_suffix_table(const Instance& instance,
                               std::size_t memory_budget = kDefaultMemoryBudget);

/// Reconstructs a string of length f(i, j, k, r). Ties go to the first
/// alternative in the recurrence (left before up, taking the symbol before
/// skipping it). Throws std::domain_error when the cell is NEG_INF.
std::string traceback_suffix(const SuffixTable& table, const Instance& instance,
                             std::size_t i, std::size_t j, std::size_t k,
                             std::size_t r);

}  // namespace clcs
