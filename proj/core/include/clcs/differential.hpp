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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "clcs/oracle.hpp"
#include "clcs/types.hpp"

namespace clcs {

/// A solver checked against the exhaustive oracle.
struct SolverUnderTest {
  std::string name;
  std::function<Outcome(const Instance&)> solve;
};

/// The two table-based solvers with the default budget.
std::vector<SolverUnderTest> default_solvers();

struct DifferentialOptions {
  GenParams params;
  std::uint64_t iterations = 0;
  bool keep_going = false;
  /// Worker threads; results are reported in index order regardless.
  unsigned threads = 1;
};

struct Mismatch {
  std::uint64_t index = 0;
  Instance instance;
  std::string detail;
};

struct DifferentialReport {
  std::uint64_t checked = 0;
  std::uint64_t feasible = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares one instance: every solver must match the oracle on feasibility
/// and length, and every feasible witness must validate with
/// |witness| = length. Returns an empty string on agreement.
std::string compare_with_oracle(const Instance& instance, const Outcome& oracle,
                                std::span<const SolverUnderTest> solvers);

/// Runs gen_instance(params, index) for index in [0, iterations). Without
/// keep_going, stops after the lowest-index mismatch.
DifferentialReport run_differential(const DifferentialOptions& options,
                                    std::span<const SolverUnderTest> solvers);

}  // namespace clcs
