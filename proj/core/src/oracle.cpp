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

#include "clcs/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "clcs/predicates.hpp"

namespace clcs {

namespace {

/// Distinct subsequences of `seq`, sorted.
std::vector<std::string> distinct_subsequences(std::string_view seq) {
  if (seq.size() > kOracleMaxLength) {
    throw SizeError("exhaustive enumeration is limited to " +
                    std::to_string(kOracleMaxLength) + " symbols, got " +
                    std::to_string(seq.size()));
  }
  const std::uint32_t limit = std::uint32_t{1} << seq.size();
  std::vector<std::string> all;
  all.reserve(limit);
  std::string buf;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    buf.clear();
    for (std::size_t bit = 0; bit < seq.size(); ++bit) {
      if (mask & (std::uint32_t{1} << bit)) buf.push_back(seq[bit]);
    }
    all.push_back(buf);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

Outcome brute_force_solve(const Instance& instance) {
  std::optional<std::string> best;
  for (const std::string& w : distinct_subsequences(instance.x())) {
    if (best && w.size() <= best->size()) continue;
    if (!is_subsequence(w, instance.y())) continue;
    if (!is_substring(instance.p(), w)) continue;
    if (is_subsequence(instance.q(), w)) continue;
    best = w;
  }
  if (!best) return Outcome::infeasible();
  return Outcome::solved(std::move(*best));
}

ExtLen brute_force_cell(const Instance& instance, TableKind kind, CellIndex at) {
  const Sequence& x = instance.x();
  const Sequence& y = instance.y();
  const Sequence& p = instance.p();
  const Sequence& q = instance.q();
  const std::size_t n = instance.n(), m = instance.m();
  const std::size_t s = instance.s(), t = instance.t();

  std::string_view x_range, y_range;
  std::string_view must_end_with, must_avoid;
  bool avoid = true;
  switch (kind) {
    case TableKind::kSuffix:
      if (at.i > n || at.j > m || at.k > s || at.r > t) {
        throw std::out_of_range("suffix cell outside the table");
      }
      x_range = x.slice(1, at.i);
      y_range = y.slice(1, at.j);
      must_end_with = p.slice(1, at.k);
      avoid = at.r > 0;
      must_avoid = q.slice(1, at.r);
      break;
    case TableKind::kForward:
      if (at.i > n || at.j > m || at.k > t) {
        throw std::out_of_range("forward cell outside the table");
      }
      x_range = x.slice(1, at.i);
      y_range = y.slice(1, at.j);
      avoid = at.k > 0;
      must_avoid = q.slice(1, at.k);
      break;
    case TableKind::kReverse:
      if (at.i < 1 || at.j < 1 || at.k < 1 || at.i > n + 1 || at.j > m + 1 ||
          at.k > t) {
        throw std::out_of_range("reverse cell outside the table");
      }
      x_range = x.slice(at.i, n);
      y_range = y.slice(at.j, m);
      must_avoid = q.slice(at.k, t);
      break;
  }

  ExtLen best = kNegInf;
  for (const std::string& w : distinct_subsequences(x_range)) {
    const ExtLen len(static_cast<ExtLen::Rep>(w.size()));
    if (len <= best) continue;
    if (!std::string_view(w).ends_with(must_end_with)) continue;
    if (avoid && is_subsequence(must_avoid, w)) continue;
    if (!is_subsequence(w, y_range)) continue;
    best = len;
  }
  return best;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed, std::uint64_t stream) noexcept
    : state_(splitmix64(splitmix64(seed) ^ stream)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::operator()() noexcept {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) noexcept {
  // Reject the low residue class so every remainder is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = (*this)();
    if (draw >= threshold) return draw % bound;
  }
}

double Xorshift64Star::unit() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

void GenParams::check() const {
  if (n_max < 1 || n_max > kOracleMaxLength) {
    throw std::invalid_argument("n_max must be in [1, 18]");
  }
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  if (s_max < 1 || s_max > kOracleMaxLength) {
    throw std::invalid_argument("s_max must be in [1, 18]");
  }
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  if (alphabet_size < 2 || alphabet_size > 8) {
    throw std::invalid_argument("alphabet_size must be in [2, 8]");
  }
  if (!(plant_probability >= 0.0 && plant_probability <= 1.0)) {
    throw std::invalid_argument("plant_probability must be in [0, 1]");
  }
}

Instance gen_instance(const GenParams& params, std::uint64_t index) {
  params.check();
  Xorshift64Star rng(params.seed, index);

  const std::size_t sigma = rng.between(2, params.alphabet_size);
  const std::size_t n = rng.between(1, params.n_max);
  const std::size_t m = rng.between(1, params.m_max);
  const std::size_t s = rng.between(1, params.s_max);
  const std::size_t t = rng.between(1, params.t_max);

  auto draw = [&](std::size_t len) {
    std::string out(len, 'a');
    for (char& c : out) c = static_cast<char>('a' + rng.below(sigma));
    return out;
  };
  std::string x = draw(n), y = draw(m), p = draw(s), q = draw(t);

  if (rng.unit() < params.plant_probability) {
    auto plant = [&](std::string& host) {
      if (host.size() < p.size()) host.resize(p.size());
      const std::size_t offset = rng.below(host.size() - p.size() + 1);
      host.replace(offset, p.size(), p);
    };
    plant(x);
    plant(y);
  }
  return Instance(std::move(x), std::move(y), std::move(p), std::move(q));
}

}  // namespace clcs
