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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "clcs/types.hpp"

namespace clcs {

enum class Algorithm { kQuartic, kCubic, kOracle };

std::string_view to_string(Algorithm algorithm) noexcept;

/// Parses "quartic", "cubic" or "oracle".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct SolverConfig {
  Algorithm algorithm = Algorithm::kCubic;
  std::size_t memory_budget = kDefaultMemoryBudget;
  bool collect_stats = false;
};

/// Exact work counters. cell_updates is the sum of the three table
/// counters that the solver built.
struct SolverStats {
  std::uint64_t suffix_updates = 0;   // quartic only: n*m*(s+1)*(t+1)
  std::uint64_t forward_updates = 0;  // cubic only: n*m*(t+1)
  std::uint64_t reverse_updates = 0;  // both: n*m*t
  std::uint64_t cell_updates = 0;
  std::uint64_t combine_candidates = 0;
  std::chrono::nanoseconds wall_time{0};
};

struct SolveResult {
  Outcome outcome;
  SolverStats stats;
};

/// Suffix table plus reverse exclusion table, combined over every split
/// (i, j, r). Throws CapacityError when the suffix table exceeds
/// `memory_budget`.
SolveResult solve_quartic(const Instance& instance,
                          std::size_t memory_budget = kDefaultMemoryBudget);

/// Forward and reverse exclusion tables joined through the compact
/// appearances of P and the overlap table alpha.
SolveResult solve_cubic(const Instance& instance,
                        std::size_t memory_budget = kDefaultMemoryBudget);

/// Dispatches on config.algorithm. Stats are zeroed unless collect_stats.
SolveResult solve(const Instance& instance, const SolverConfig& config);

}  // namespace clcs
