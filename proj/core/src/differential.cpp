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

#include "clcs/differential.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>

#include "clcs/predicates.hpp"
#include "clcs/solvers.hpp"

namespace clcs {

std::vector<SolverUnderTest> default_solvers() {
  return {
      {"quartic", [](const Instance& in) { return solve_quartic(in).outcome; }},
      {"cubic", [](const Instance& in) { return solve_cubic(in).outcome; }},
  };
}

std::string compare_with_oracle(const Instance& instance, const Outcome& oracle,
                                std::span<const SolverUnderTest> solvers) {
  std::ostringstream why;
  for (const SolverUnderTest& solver : solvers) {
    Outcome got;
    try {
      got = solver.solve(instance);
    } catch (const std::exception& e) {
      why << solver.name << " threw: " << e.what() << "; ";
      continue;
    }
    if (got.feasible() != oracle.feasible() || got.length != oracle.length) {
      why << solver.name << " length " << got.length << " != oracle "
          << oracle.length << "; ";
      continue;
    }
    if (!got.feasible()) continue;
    const ValidationReport report = validate(instance, *got.witness);
    if (!report.valid() ||
        got.length != ExtLen(static_cast<ExtLen::Rep>(got.witness->size()))) {
      why << solver.name << " witness \"" << *got.witness << "\" invalid ("
          << "common=" << report.is_common_subsequence
          << " includes_p=" << report.includes_p_substring
          << " excludes_q=" << report.excludes_q_subsequence << "); ";
    }
  }
  return why.str();
}

namespace {

struct Verdict {
  bool feasible = false;
  std::optional<Mismatch> mismatch;
};

Verdict check_index(const GenParams& params, std::uint64_t index,
                    std::span<const SolverUnderTest> solvers) {
  Instance instance = gen_instance(params, index);
  const Outcome oracle = brute_force_solve(instance);
  Verdict verdict;
  verdict.feasible = oracle.feasible();
  std::string detail = compare_with_oracle(instance, oracle, solvers);
  if (!detail.empty()) {
    verdict.mismatch = Mismatch{index, std::move(instance), std::move(detail)};
  }
  return verdict;
}

}  // namespace

DifferentialReport run_differential(const DifferentialOptions& options,
                                    std::span<const SolverUnderTest> solvers) {
  options.params.check();
  const unsigned workers = std::max(1u, options.threads);
  const std::uint64_t block = std::uint64_t{workers} * 64;

  DifferentialReport report;
  std::vector<Verdict> verdicts;
  for (std::uint64_t base = 0; base < options.iterations; base += block) {
    const std::uint64_t count = std::min(block, options.iterations - base);
    verdicts.assign(count, Verdict{});
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::uint64_t off = w; off < count; off += workers) {
            verdicts[off] = check_index(options.params, base + off, solvers);
          }
        });
      }
    }
    for (Verdict& verdict : verdicts) {
      ++report.checked;
      if (verdict.feasible) ++report.feasible;
      if (verdict.mismatch) {
        report.mismatches.push_back(std::move(*verdict.mismatch));
        if (!options.keep_going) return report;
      }
    }
  }
  return report;
}

}  // namespace clcs
