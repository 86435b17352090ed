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

#include "clcs/suffix_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace clcs {

SuffixTable::SuffixTable(std::size_t n, std::size_t m, std::size_t s,
                         std::size_t t)
    : n_(n), m_(m), s_(s), t_(t), cells_(cell_count(n, m, s, t)) {}

SuffixTable build_suffix_table(const Instance& instance,
                               std::size_t memory_budget) {
  const std::size_t n = instance.n(), m = instance.m();
  const std::size_t s = instance.s(), t = instance.t();
  require_capacity(SuffixTable::cell_count(n, m, s, t), sizeof(ExtLen),
                   memory_budget, "suffix table");

  SuffixTable f(n, m, s, t);
  for (std::size_t k = 0; k <= s; ++k) {
    const ExtLen edge = k == 0 ? ExtLen(0) : kNegInf;
    for (std::size_t r = 0; r <= t; ++r) {
      for (std::size_t i = 0; i <= n; ++i) f.ref(i, 0, k, r) = edge;
      for (std::size_t j = 0; j <= m; ++j) f.ref(0, j, k, r) = edge;
    }
  }

  const Sequence& x = instance.x();
  const Sequence& y = instance.y();
  const Sequence& p = instance.p();
  const Sequence& q = instance.q();

  for (std::size_t i = 1; i <= n; ++i) {
    const char xi = x.symbol(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const bool match = xi == y.symbol(j);
      for (std::size_t k = 0; k <= s; ++k) {
        for (std::size_t r = 0; r <= t; ++r) {
          ExtLen value;
          if (!match) {
            value = max(f.at(i - 1, j, k, r), f.at(i, j - 1, k, r));
          } else if (k >= 1 && xi == p.symbol(k)) {
            if (r == 0 || xi != q.symbol(r)) {
              value = 1 + f.at(i - 1, j - 1, k - 1, r);
            } else if (r == 1) {
              value = f.at(i - 1, j - 1, k, r);
            } else {
              value = max(1 + f.at(i - 1, j - 1, k - 1, r - 1),
                          f.at(i - 1, j - 1, k, r));
            }
          } else if (k >= 1) {
            value = f.at(i - 1, j - 1, k, r);
          } else if (r == 0 || xi != q.symbol(r)) {
            value = 1 + f.at(i - 1, j - 1, 0, r);
          } else if (r == 1) {
            value = f.at(i - 1, j - 1, 0, r);
          } else {
            value = max(1 + f.at(i - 1, j - 1, 0, r - 1),
                        f.at(i - 1, j - 1, 0, r));
          }
          f.ref(i, j, k, r) = value;
          ++f.update_count_;
        }
      }
    }
  }
  return f;
}

std::string traceback_suffix(const SuffixTable& f, const Instance& instance,
                             std::size_t i, std::size_t j, std::size_t k,
                             std::size_t r) {
  if (i > f.n() || j > f.m() || k > f.s() || r > f.t()) {
    throw std::out_of_range("traceback_suffix: index outside the table");
  }
  if (f.at(i, j, k, r).is_neg_inf()) {
    throw std::domain_error("traceback_suffix: cell is NEG_INF, no witness");
  }

  const Sequence& x = instance.x();
  const Sequence& y = instance.y();
  const Sequence& p = instance.p();
  const Sequence& q = instance.q();

  // Symbols are emitted last-first.
  std::string out;
  while (i >= 1 && j >= 1) {
    const char xi = x.symbol(i);
    if (xi != y.symbol(j)) {
      if (f.at(i - 1, j, k, r) >= f.at(i, j - 1, k, r)) {
        --i;
      } else {
        --j;
      }
      continue;
    }
    const bool on_p = k >= 1 && xi == p.symbol(k);
    if (k >= 1 && !on_p) {
      --i, --j;
      continue;
    }
    // Remaining cases differ only in whether k steps down with the symbol.
    const std::size_t k_next = on_p ? k - 1 : 0;
    if (r == 0 || xi != q.symbol(r)) {
      out.push_back(xi);
      --i, --j, k = k_next;
    } else if (r == 1) {
      --i, --j;
    } else if (1 + f.at(i - 1, j - 1, k_next, r - 1) >= f.at(i - 1, j - 1, k, r)) {
      out.push_back(xi);
      --i, --j, k = k_next, --r;
    } else {
      --i, --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace clcs
