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

#include <set>

#include "clcs/oracle.hpp"
#include "clcs/predicates.hpp"
#include "clcs/preprocess.hpp"

namespace clcs {
namespace {

TEST(BruteForceSolveTest, Examples) {
  const Outcome abc = brute_force_solve(Instance("abc", "abc", "b", "d"));
  EXPECT_EQ(ExtLen(3), abc.length);
  EXPECT_EQ("abc", abc.witness);

  // Optima of length 3 are "aab" and "aba"; the smaller one is reported.
  const Outcome abab = brute_force_solve(Instance("abab", "abab", "ab", "bb"));
  EXPECT_EQ(ExtLen(3), abab.length);
  EXPECT_EQ("aab", abab.witness);

  const Outcome none = brute_force_solve(Instance("ab", "ab", "ab", "a"));
  EXPECT_FALSE(none.feasible());
  EXPECT_EQ(kNegInf, none.length);
}

TEST(BruteForceSolveTest, SizeLimit) {
  const std::string eighteen(18, 'a');
  EXPECT_NO_THROW(brute_force_solve(Instance(eighteen, "a", "a", "b")));
  EXPECT_THROW(brute_force_solve(Instance(eighteen + "a", "a", "a", "b")),
               SizeError);
}

TEST(BruteForceCellTest, Examples) {
  EXPECT_EQ(ExtLen(2), brute_force_cell(Instance("ab", "ab", "b", "a"),
                                        TableKind::kSuffix, {2, 2, 0, 0}));
  EXPECT_EQ(kNegInf, brute_force_cell(Instance("ab", "ab", "a", "a"),
                                      TableKind::kSuffix, {2, 2, 1, 1}));
  EXPECT_EQ(ExtLen(1), brute_force_cell(Instance("aa", "aa", "a", "aa"),
                                        TableKind::kForward, {2, 2, 2}));
  EXPECT_EQ(ExtLen(0), brute_force_cell(Instance("aa", "aa", "a", "aa"),
                                        TableKind::kReverse, {1, 1, 2}));
  EXPECT_EQ(ExtLen(0), brute_force_cell(Instance("aa", "aa", "a", "aa"),
                                        TableKind::kReverse, {3, 3, 1}));
}

TEST(BruteForceCellTest, Errors) {
  const Instance in("ab", "ab", "a", "a");
  EXPECT_THROW(brute_force_cell(in, TableKind::kSuffix, {3, 0, 0, 0}),
               std::out_of_range);
  EXPECT_THROW(brute_force_cell(in, TableKind::kReverse, {1, 1, 0}),
               std::out_of_range);
  EXPECT_THROW(brute_force_cell(in, TableKind::kForward, {0, 0, 2}),
               std::out_of_range);
  const Instance big(std::string(19, 'a'), "a", "a", "b");
  EXPECT_THROW(brute_force_cell(big, TableKind::kForward, {19, 1, 1}), SizeError);
  EXPECT_NO_THROW(brute_force_cell(big, TableKind::kReverse, {2, 1, 1}));
}

TEST(XorshiftTest, ReferenceStream) {
  // Reference values from an independent re-implementation.
  Xorshift64Star a(1, 0);
  EXPECT_EQ(0x62ed93a550629eeaULL, a());
  EXPECT_EQ(0xf3d60c64af8e8a18ULL, a());
  EXPECT_EQ(0x5f92f4f69a367ab9ULL, a());
  Xorshift64Star b(42, 7);
  EXPECT_EQ(0x68dde8362742d07dULL, b());
  EXPECT_EQ(0x31d357d12b7b3658ULL, b());
}

TEST(XorshiftTest, BoundedDraws) {
  Xorshift64Star rng(9);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = rng.between(3, 7);
    ASSERT_GE(v, 3u);
    ASSERT_LE(v, 7u);
    seen.insert(v);
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(5u, seen.size());
}

TEST(GenInstanceTest, Deterministic) {
  GenParams params;
  params.seed = 1;
  EXPECT_EQ(gen_instance(params, 0), gen_instance(params, 0));
  EXPECT_EQ(gen_instance(params, 17), gen_instance(params, 17));
  bool differs = false;
  for (std::uint64_t i = 1; i < 20 && !differs; ++i) {
    differs = !(gen_instance(params, 0) == gen_instance(params, i));
  }
  EXPECT_TRUE(differs);
}

TEST(GenInstanceTest, RespectsBoundsAndAlphabet) {
  GenParams params;
  params.seed = 5;
  params.alphabet_size = 2;
  params.plant_probability = 0.0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Instance in = gen_instance(params, i);
    ASSERT_GE(in.n(), 1u);
    ASSERT_LE(in.n(), params.n_max);
    ASSERT_LE(in.m(), params.m_max);
    ASSERT_LE(in.s(), params.s_max);
    ASSERT_LE(in.t(), params.t_max);
    for (const Sequence* seq : {&in.x(), &in.y(), &in.p(), &in.q()}) {
      for (char c : seq->str()) ASSERT_TRUE(c == 'a' || c == 'b');
    }
  }
}

TEST(GenInstanceTest, PlantedDrawsContainCompactAppearances) {
  GenParams params;
  params.seed = 77;
  params.plant_probability = 1.0;
  params.s_max = 5;
  params.n_max = 3;
  params.m_max = 3;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Instance in = gen_instance(params, i);
    ASSERT_TRUE(is_substring(in.p(), in.x()));
    ASSERT_TRUE(is_substring(in.p(), in.y()));
    const PrepTables prep = build_prep(in);
    auto any_start = [](const std::vector<std::size_t>& ends) {
      for (std::size_t e : ends) if (e > 0) return true;
      return false;
    };
    ASSERT_TRUE(any_start(prep.lx));
    ASSERT_TRUE(any_start(prep.ly));
  }
}

TEST(GenParamsTest, RejectsOutOfRange) {
  GenParams params;
  params.n_max = 19;
  EXPECT_THROW(params.check(), std::invalid_argument);
  params = {};
  params.alphabet_size = 1;
  EXPECT_THROW(params.check(), std::invalid_argument);
  params = {};
  params.alphabet_size = 9;
  EXPECT_THROW(params.check(), std::invalid_argument);
  params = {};
  params.plant_probability = 1.5;
  EXPECT_THROW(params.check(), std::invalid_argument);
  params = {};
  params.t_max = 0;
  EXPECT_THROW(gen_instance(params, 0), std::invalid_argument);
}

}  // namespace
}  // namespace clcs
