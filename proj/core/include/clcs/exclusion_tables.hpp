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

/// v(i, j, k): LCS length of X[1:i] and Y[1:j] over strings that avoid
/// Q[1:k] as a subsequence; k = 0 is the plain LCS. Indexed i in 0..n,
/// j in 0..m, k in 0..t. Every cell is finite.
class ForwardTable {
 public:
  ForwardTable(std::size_t n, std::size_t m, std::size_t t);

  ExtLen at(std::size_t i, std::size_t j, std::size_t k) const {
    return cells_[index(i, j, k)];
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t t() const noexcept { return t_; }
  std::uint64_t update_count() const noexcept { return update_count_; }

  static std::size_t cell_count(std::size_t n, std::size_t m, std::size_t t) {
    return checked_cells({n + 1, m + 1, t + 1});
  }

 private:
  friend ForwardTable build_forward_table(const Sequence&, const Sequence&,
                                          const Sequence&, std::size_t);

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * (m_ + 1) + j) * (t_ + 1) + k;
  }

  std::size_t n_, m_, t_;
  std::vector<ExtLen> cells_;
  std::uint64_t update_count_ = 0;
};

/// h(i, j, k): LCS length of X[i:n] and Y[j:m] over strings that avoid
/// Q[k:t] as a subsequence. Indexed i in 1..n+1, j in 1..m+1, k in 1..t;
/// row n+1 and column m+1 are the empty-suffix boundary (0).
class ReverseTable {
 public:
  ReverseTable(std::size_t n, std::size_t m, std::size_t t);

  ExtLen at(std::size_t i, std::size_t j, std::size_t k) const {
    return cells_[index(i, j, k)];
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t t() const noexcept { return t_; }
  std::uint64_t update_count() const noexcept { return update_count_; }

  static std::size_t cell_count(std::size_t n, std::size_t m, std::size_t t) {
    return checked_cells({n + 1, m + 1, t});
  }

 private:
  friend ReverseTable build_reverse_table(const Sequence&, const Sequence&,
                                          const Sequence&, std::size_t);

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return ((i - 1) * (m_ + 1) + (j - 1)) * t_ + (k - 1);
  }

  std::size_t n_, m_, t_;
  std::vector<ExtLen> cells_;
  std::uint64_t update_count_ = 0;
};

/// Throws std::invalid_argument when q is empty and CapacityError when the
/// table exceeds `memory_budget` bytes.
ForwardTable build_forward_table(const Sequence& x, const Sequence& y,
                                 const Sequence& q,
                                 std::size_t memory_budget = kDefaultMemoryBudget);

ReverseTable build_reverse_table(const Sequence& x, const Sequence& y,
                                 const Sequence& q,
                                 std::size_t memory_budget = kDefaultMemoryBudget);

/// Witness of length v(i, j, k). Ties resolve to the first alternative of
/// the recurrence.
std::string traceback_forward(const ForwardTable& v, const Sequence& x,
                              const Sequence& y, const Sequence& q,
                              std::size_t i, std::size_t j, std::size_t k);

/// Witness of length h(i, j, k), in left-to-right order.
std::string traceback_reverse(const ReverseTable& h, const Sequence& x,
                              const Sequence& y, const Sequence& q,
                              std::size_t i, std::size_t j, std::size_t k);

}  // namespace clcs
