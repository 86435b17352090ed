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

#include "clcs/solvers.hpp"

#include "clcs/exclusion_tables.hpp"
#include "clcs/oracle.hpp"
#include "clcs/preprocess.hpp"
#include "clcs/suffix_table.hpp"

namespace clcs {

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::kQuartic:
      return "quartic";
    case Algorithm::kCubic:
      return "cubic";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "quartic") return Algorithm::kQuartic;
  if (name == "cubic") return Algorithm::kCubic;
  if (name == "oracle") return Algorithm::kOracle;
  return std::nullopt;
}

SolveResult solve_quartic(const Instance& instance, std::size_t memory_budget) {
  const auto start = Clock::now();
  const std::size_t n = instance.n(), m = instance.m();
  const std::size_t s = instance.s(), t = instance.t();

  // Both tables are checked against the budget before either is built.
  require_capacity(SuffixTable::cell_count(n, m, s, t) +
                       ReverseTable::cell_count(n, m, t),
                   sizeof(ExtLen), memory_budget, "quartic tables");
  const SuffixTable f = build_suffix_table(instance, memory_budget);
  const ReverseTable h =
      build_reverse_table(instance.x(), instance.y(), instance.q(), memory_budget);

  SolveResult result;
  ExtLen best = kNegInf;
  Decomposition at;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      for (std::size_t r = 1; r <= t; ++r) {
        ++result.stats.combine_candidates;
        const ExtLen candidate = f.at(i, j, s, r) + h.at(i + 1, j + 1, r);
        if (best < candidate) {
          best = candidate;
          at = {i, j, s, r};
        }
      }
    }
  }

  if (best.finite()) {
    std::string witness = traceback_suffix(f, instance, at.i, at.j, s, at.r);
    witness += traceback_reverse(h, instance.x(), instance.y(), instance.q(),
                                 at.i + 1, at.j + 1, at.r);
    result.outcome = Outcome::solved(std::move(witness), at);
  }

  result.stats.suffix_updates = f.update_count();
  result.stats.reverse_updates = h.update_count();
  result.stats.cell_updates = f.update_count() + h.update_count();
  result.stats.wall_time = Clock::now() - start;
  return result;
}

SolveResult solve_cubic(const Instance& instance, std::size_t memory_budget) {
  const auto start = Clock::now();
  const std::size_t n = instance.n(), m = instance.m();
  const std::size_t s = instance.s(), t = instance.t();
  const Sequence& x = instance.x();
  const Sequence& y = instance.y();
  const Sequence& q = instance.q();

  require_capacity(ForwardTable::cell_count(n, m, t) +
                       ReverseTable::cell_count(n, m, t),
                   sizeof(ExtLen), memory_budget, "cubic tables");
  const ForwardTable v = build_forward_table(x, y, q, memory_budget);
  const ReverseTable h = build_reverse_table(x, y, q, memory_budget);
  const PrepTables prep = build_prep(instance);

  SolveResult result;
  ExtLen best = kNegInf;
  Decomposition at;
  for (std::size_t i = 1; i <= n; ++i) {
    if (prep.lx[i] == 0) continue;
    for (std::size_t j = 1; j <= m; ++j) {
      if (prep.ly[j] == 0) continue;
      for (std::size_t k = 1; k <= t; ++k) {
        ++result.stats.combine_candidates;
        // P would finish Q on top of a prefix that already holds Q[1:k-1].
        const std::size_t r = k + prep.alpha[k];
        if (r > t) continue;
        const ExtLen candidate = v.at(i - 1, j - 1, k) +
                                 h.at(prep.lx[i] + 1, prep.ly[j] + 1, r) +
                                 static_cast<ExtLen::Rep>(s);
        if (best < candidate) {
          best = candidate;
          at = {i, j, k, r};
        }
      }
    }
  }

  if (best.finite()) {
    std::string witness = traceback_forward(v, x, y, q, at.i - 1, at.j - 1, at.k);
    witness += instance.p().str();
    witness += traceback_reverse(h, x, y, q, prep.lx[at.i] + 1,
                                 prep.ly[at.j] + 1, at.r);
    result.outcome = Outcome::solved(std::move(witness), at);
  }

  result.stats.forward_updates = v.update_count();
  result.stats.reverse_updates = h.update_count();
  result.stats.cell_updates = v.update_count() + h.update_count();
  result.stats.wall_time = Clock::now() - start;
  return result;
}

SolveResult solve(const Instance& instance, const SolverConfig& config) {
  if (config.memory_budget == 0) {
    throw std::invalid_argument("memory budget must be positive");
  }
  SolveResult result;
  switch (config.algorithm) {
    case Algorithm::kQuartic:
      result = solve_quartic(instance, config.memory_budget);
      break;
    case Algorithm::kCubic:
      result = solve_cubic(instance, config.memory_budget);
      break;
    case Algorithm::kOracle: {
      const auto start = Clock::now();
      result.outcome = brute_force_solve(instance);
      result.stats.wall_time = Clock::now() - start;
      break;
    }
  }
  if (!config.collect_stats) result.stats = {};
  return result;
}

}  // namespace clcs
