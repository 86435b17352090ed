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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace clcs {

/// Thrown when a table would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive routine is asked to work beyond its size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A finite string of 8-bit symbols. Positions are 1-based: symbol(1) is
/// the first symbol, and slice(i, j) is the inclusive range i..j (empty
/// when i > j).
class Sequence {
 public:
  Sequence() = default;
  Sequence(std::string symbols) : symbols_(std::move(symbols)) {}
  Sequence(std::string_view symbols) : symbols_(symbols) {}
  Sequence(const char* symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// 1-based access; no bounds check.
  char symbol(std::size_t i) const noexcept { return symbols_[i - 1]; }

  /// Inclusive 1-based slice. Out-of-range ends are clamped.
  std::string_view slice(std::size_t i, std::size_t j) const noexcept {
    if (i < 1) i = 1;
    if (j > size()) j = size();
    if (i > j) return {};
    return std::string_view(symbols_).substr(i - 1, j - i + 1);
  }

  const std::string& str() const noexcept { return symbols_; }
  std::string_view view() const noexcept { return symbols_; }
  operator std::string_view() const noexcept { return symbols_; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::string symbols_;
};

inline std::ostream& operator<<(std::ostream& os, const Sequence& seq) {
  return os << seq.str();
}

/// The problem input (X, Y, P, Q). P and Q must be nonempty.
class Instance {
 public:
  /// Throws std::invalid_argument when P or Q is empty.
  Instance(Sequence x, Sequence y, Sequence include, Sequence exclude);

  const Sequence& x() const noexcept { return x_; }
  const Sequence& y() const noexcept { return y_; }
  const Sequence& p() const noexcept { return p_; }
  const Sequence& q() const noexcept { return q_; }

  std::size_t n() const noexcept { return x_.size(); }
  std::size_t m() const noexcept { return y_.size(); }
  std::size_t s() const noexcept { return p_.size(); }
  std::size_t t() const noexcept { return q_.size(); }

  /// Same constraints, X and Y exchanged.
  Instance swapped() const { return Instance(y_, x_, p_, q_); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Sequence x_, y_, p_, q_;
};

std::ostream& operator<<(std::ostream& os, const Instance& instance);

/// A length that may be the infeasible sentinel NEG_INF. NEG_INF absorbs
/// addition and orders below every finite length.
class ExtLen {
 public:
  using Rep = std::int32_t;

  constexpr ExtLen() noexcept = default;
  constexpr explicit ExtLen(Rep value) noexcept : value_(value) {}

  static constexpr ExtLen neg_inf() noexcept { return ExtLen(kSentinel); }

  constexpr bool finite() const noexcept { return value_ != kSentinel; }
  constexpr bool is_neg_inf() const noexcept { return value_ == kSentinel; }

  /// Precondition: finite().
  constexpr Rep value() const noexcept { return value_; }

  constexpr ExtLen operator+(ExtLen other) const noexcept {
    if (!finite() || !other.finite()) return neg_inf();
    return ExtLen(value_ + other.value_);
  }
  constexpr ExtLen operator+(Rep delta) const noexcept {
    return finite() ? ExtLen(value_ + delta) : neg_inf();
  }
  friend constexpr ExtLen operator+(Rep delta, ExtLen len) noexcept {
    return len + delta;
  }

  friend constexpr auto operator<=>(ExtLen, ExtLen) = default;
  friend constexpr bool operator==(ExtLen, ExtLen) = default;

 private:
  static constexpr Rep kSentinel = std::numeric_limits<Rep>::min();
  Rep value_ = 0;
};

inline constexpr ExtLen kNegInf = ExtLen::neg_inf();

constexpr ExtLen max(ExtLen a, ExtLen b) noexcept { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, ExtLen len);

/// Split point reported by a solver.
///   quartic: prefix ends at (i, j), k = s, r = exclusion index shared by
///            the suffix and reverse tables.
///   cubic:   P starts at (i, j), k = forward exclusion index,
///            r = k + alpha(k).
///   oracle:  all zero.
struct Decomposition {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t r = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Result of a solve. feasible <=> length finite <=> witness present.
struct Outcome {
  ExtLen length = kNegInf;
  std::optional<std::string> witness;
  Decomposition indices;

  bool feasible() const noexcept { return witness.has_value(); }

  static Outcome infeasible() { return Outcome{}; }
  static Outcome solved(std::string witness, Decomposition indices = {}) {
    const auto len = static_cast<ExtLen::Rep>(witness.size());
    return Outcome{ExtLen(len), std::move(witness), indices};
  }
};

/// Checked product for table sizing; throws CapacityError on overflow.
std::size_t checked_cells(std::initializer_list<std::size_t> extents);

/// Throws CapacityError when `cells` values of `cell_bytes` each exceed
/// `budget` bytes. `what` names the table in the message.
void require_capacity(std::size_t cells, std::size_t cell_bytes,
                      std::size_t budget, std::string_view what);

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

}  // namespace clcs
