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
#include <vector>

#include "clcs/types.hpp"

namespace clcs {

/// End of the compact appearance of `p` in `seq` starting at position i
/// (1-based): if seq_i = p_1, greedily match p_2..p_s in seq[i+1:] and
/// return the position of p_s, else 0. For |p| = 1 returns i when
/// seq_i = p_1. Precondition: 1 <= i <= |seq|, p nonempty.
std::size_t compact_end(const Sequence& seq, std::size_t i, const Sequence& p);

/// alpha[k] for k = 1..t: the longest r such that Q[k:k+r-1] is a
/// subsequence of P, found by one greedy scan of P.
std::size_t overlap_length(const Sequence& p, const Sequence& q, std::size_t k);

/// Inputs to the cubic combiner. All arrays are 1-based; element 0 is
/// unused and zero.
struct PrepTables {
  std::vector<std::size_t> lx;     // size n + 1
  std::vector<std::size_t> ly;     // size m + 1
  std::vector<std::size_t> alpha;  // size t + 1
};

PrepTables build_prep(const Instance& instance);

}  // namespace clcs
