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

#include <gtest/gtest.h>

#include "clcs/exclusion_tables.hpp"
#include "clcs/oracle.hpp"
#include "clcs/predicates.hpp"
#include "clcs/solvers.hpp"
#include "test_support.hpp"

namespace clcs {
namespace {

struct HandCase {
  const char *x, *y, *p, *q;
  ExtLen length;
};

// Lengths confirmed by brute_force_solve before being pinned here.
const HandCase kHandCases[] = {
    {"abc", "abc", "b", "d", ExtLen(3)},
    {"abab", "abab", "ab", "bb", ExtLen(3)},
    {"cabac", "abcac", "ba", "cc", ExtLen(4)},
    {"ab", "ab", "ab", "a", kNegInf},
    {"ab", "ab", "ba", "c", kNegInf},
};

TEST(SolversTest, HandCases) {
  for (const HandCase& c : kHandCases) {
    const Instance in(c.x, c.y, c.p, c.q);
    ASSERT_EQ(c.length, brute_force_solve(in).length) << in;
    for (const Outcome& out : {solve_quartic(in).outcome, solve_cubic(in).outcome}) {
      EXPECT_EQ(c.length, out.length) << in;
      EXPECT_EQ(c.length.finite(), out.feasible()) << in;
      if (out.feasible()) EXPECT_TRUE(validate(in, *out.witness).valid()) << in;
    }
  }
}

TEST(SolversTest, Witnesses) {
  {
    const Instance in("abc", "abc", "b", "d");
    EXPECT_EQ("abc", solve_quartic(in).outcome.witness);
    EXPECT_EQ("abc", solve_cubic(in).outcome.witness);
  }
  {
    const Instance in("abab", "abab", "ab", "bb");
    EXPECT_EQ("aba", solve_quartic(in).outcome.witness);
    EXPECT_EQ("aba", solve_cubic(in).outcome.witness);
  }
  {
    const Instance in("cabac", "abcac", "ba", "cc");
    EXPECT_EQ("abac", solve_quartic(in).outcome.witness);
    EXPECT_EQ("abac", solve_cubic(in).outcome.witness);
  }
}

TEST(SolversTest, Decomposition) {
  const Instance in("abab", "abab", "ab", "bb");
  const Outcome q = solve_quartic(in).outcome;
  EXPECT_EQ((Decomposition{2, 2, 2, 2}), q.indices);
  const Outcome c = solve_cubic(in).outcome;
  const std::size_t alpha = 1;  // "bb"[1:] into "ab": one 'b'
  EXPECT_EQ(c.indices.r, c.indices.k + alpha);
  EXPECT_EQ('a', in.x().symbol(c.indices.i));
}

TEST(SolversTest, EmptyInputsAreInfeasible) {
  for (const Instance& in : {Instance("", "abc", "a", "b"), Instance("abc", "", "a", "b"),
                             Instance("", "", "a", "b")}) {
    EXPECT_FALSE(solve_quartic(in).outcome.feasible());
    EXPECT_FALSE(solve_cubic(in).outcome.feasible());
  }
}

TEST(SolversTest, PIncludingQIsInfeasible) {
  const Instance in("xabcx", "abcxx", "abc", "ac");
  EXPECT_FALSE(solve_quartic(in).outcome.feasible());
  EXPECT_FALSE(solve_cubic(in).outcome.feasible());
  EXPECT_FALSE(brute_force_solve(in).feasible());
}

TEST(SolversTest, StatsMatchClosedForms) {
  const Instance in("abcabcab", "bcabca", "abc", "cab");
  const std::uint64_t n = 8, m = 6, s = 3, t = 3;
  const SolverStats q = solve_quartic(in).stats;
  EXPECT_EQ(n * m * (s + 1) * (t + 1), q.suffix_updates);
  EXPECT_EQ(n * m * t, q.reverse_updates);
  EXPECT_EQ(0u, q.forward_updates);
  EXPECT_EQ(q.suffix_updates + q.reverse_updates, q.cell_updates);
  EXPECT_EQ(n * m * t, q.combine_candidates);

  const SolverStats c = solve_cubic(in).stats;
  EXPECT_EQ(0u, c.suffix_updates);
  EXPECT_EQ(n * m * (t + 1), c.forward_updates);
  EXPECT_EQ(n * m * t, c.reverse_updates);
  EXPECT_EQ(c.forward_updates + c.reverse_updates, c.cell_updates);
  EXPECT_LE(c.combine_candidates, n * m * t);
}

TEST(SolversTest, CubicCountsIgnoreS) {
  const Instance a("abcabcabca", "cabcabcabc", "a", "cb");
  const Instance b("abcabcabca", "cabcabcabc", "abcab", "cb");
  EXPECT_EQ(solve_cubic(a).stats.cell_updates, solve_cubic(b).stats.cell_updates);
  EXPECT_LT(solve_quartic(a).stats.cell_updates, solve_quartic(b).stats.cell_updates);
}

TEST(SolversTest, CapacityErrors) {
  const Instance in("abcabc", "abcabc", "abc", "cc");
  EXPECT_THROW(solve_quartic(in, 64), CapacityError);
  EXPECT_THROW(solve_cubic(in, 64), CapacityError);
  SolverConfig config;
  config.memory_budget = 0;
  EXPECT_THROW(solve(in, config), std::invalid_argument);
}

TEST(SolversTest, DispatchAndStatsToggle) {
  const Instance in("abab", "abab", "ab", "bb");
  SolverConfig config;
  for (Algorithm algo : {Algorithm::kQuartic, Algorithm::kCubic, Algorithm::kOracle}) {
    config.algorithm = algo;
    config.collect_stats = false;
    const SolveResult plain = solve(in, config);
    EXPECT_EQ(ExtLen(3), plain.outcome.length) << to_string(algo);
    EXPECT_EQ(0u, plain.stats.cell_updates);
    config.collect_stats = true;
    const SolveResult counted = solve(in, config);
    if (algo != Algorithm::kOracle) EXPECT_GT(counted.stats.cell_updates, 0u);
  }
  EXPECT_EQ(Algorithm::kCubic, parse_algorithm("cubic"));
  EXPECT_EQ(Algorithm::kQuartic, parse_algorithm("quartic"));
  EXPECT_EQ(Algorithm::kOracle, parse_algorithm("oracle"));
  EXPECT_FALSE(parse_algorithm("quadratic").has_value());
}

TEST(SolversProperty, AgreeWithOracleAndEachOther) {
  testing::RandomStrings gen(401);
  for (int trial = 0; trial < 600; ++trial) {
    const Instance in = gen.instance(10, 3, 3, 2 + trial % 3);
    const Outcome oracle = brute_force_solve(in);
    const Outcome q = solve_quartic(in).outcome;
    const Outcome c = solve_cubic(in).outcome;
    ASSERT_EQ(oracle.length, q.length) << in;
    ASSERT_EQ(oracle.length, c.length) << in;
    ASSERT_EQ(q.feasible(), c.feasible()) << in;

    const ExtLen lcs_bound = build_forward_table(in.x(), in.y(), in.q()).at(in.n(), in.m(), 0);
    ASSERT_LE(q.length, lcs_bound);
    for (const Outcome& out : {q, c}) {
      if (!out.feasible()) continue;
      ASSERT_TRUE(validate(in, *out.witness).valid()) << in << " " << *out.witness;
      ASSERT_GE(out.length, ExtLen(static_cast<int>(in.s())));
    }
    ASSERT_EQ(q.length, solve_quartic(in.swapped()).outcome.length) << in;
    ASSERT_EQ(c.length, solve_cubic(in.swapped()).outcome.length) << in;
  }
}

TEST(SolversProperty, DeterministicWitnesses) {
  testing::RandomStrings gen(403);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance in = gen.instance(14, 3, 3, 2);
    const Outcome q1 = solve_quartic(in).outcome, q2 = solve_quartic(in).outcome;
    const Outcome c1 = solve_cubic(in).outcome, c2 = solve_cubic(in).outcome;
    ASSERT_EQ(q1.witness, q2.witness);
    ASSERT_EQ(q1.indices, q2.indices);
    ASSERT_EQ(c1.witness, c2.witness);
    ASSERT_EQ(c1.indices, c2.indices);
  }
}

}  // namespace
}  // namespace clcs
