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

#include "clcs/types.hpp"

namespace clcs {

/// Longest X the exhaustive routines accept (2^18 subsets).
inline constexpr std::size_t kOracleMaxLength = 18;

/// Exhaustive solver: every distinct subsequence of X is tested against
/// the definition. Returns the longest valid string, choosing the
/// lexicographically smallest among equals. Throws SizeError when n > 18.
Outcome brute_force_solve(const Instance& instance);

enum class TableKind { kSuffix, kForward, kReverse };

struct CellIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t r = 0;  // suffix table only
};

/// Definitional value of one DP cell by enumeration.
///   kSuffix:  subsequences of X[1:i] and Y[1:j] ending with P[1:k],
///             avoiding Q[1:r] (k = 0 / r = 0 unconstrained).
///   kForward: subsequences of X[1:i] and Y[1:j] avoiding Q[1:k]
///             (k = 0 unconstrained).
///   kReverse: subsequences of X[i:n] and Y[j:m] avoiding Q[k:t],
///             1 <= i <= n+1, 1 <= j <= m+1, 1 <= k <= t.
/// Throws SizeError when the enumerated X range exceeds 18 symbols and
/// std::out_of_range for indices outside the table.
ExtLen brute_force_cell(const Instance& instance, TableKind kind, CellIndex at);

/// xorshift64* (Vigna): state ^= state >> 12; state ^= state << 25;
/// state ^= state >> 27; output state * 0x2545F4914F6CDD1D. The state is
/// seeded from (seed, stream) through two rounds of splitmix64, so any
/// (seed, stream) pair reproduces its draws exactly on every platform.
class Xorshift64Star {
 public:
  using result_type = std::uint64_t;

  explicit Xorshift64Star(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint64_t operator()() noexcept;

  /// Uniform integer in [0, bound) by rejection sampling. bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + below(hi - lo + 1);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t n_max = 10;
  std::size_t m_max = 10;
  std::size_t s_max = 3;
  std::size_t t_max = 3;
  /// Upper end of the per-instance alphabet size, drawn from
  /// [2, alphabet_size]. Symbols are 'a', 'b', ...
  std::size_t alphabet_size = 4;
  double plant_probability = 0.5;

  /// Throws std::invalid_argument on out-of-range fields.
  void check() const;
};

/// Deterministic instance for (params.seed, index). Lengths are drawn from
/// [1, max]. With probability plant_probability, P is copied contiguously
/// into X and into Y at random offsets (a side shorter than s grows to s).
Instance gen_instance(const GenParams& params, std::uint64_t index);

}  // namespace clcs
