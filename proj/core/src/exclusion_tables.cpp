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

#include "clcs/exclusion_tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace clcs {

ForwardTable::ForwardTable(std::size_t n, std::size_t m, std::size_t t)
    : n_(n), m_(m), t_(t), cells_(cell_count(n, m, t), ExtLen(0)) {}

ReverseTable::ReverseTable(std::size_t n, std::size_t m, std::size_t t)
    : n_(n), m_(m), t_(t), cells_(cell_count(n, m, t), ExtLen(0)) {}

ForwardTable build_forward_table(const Sequence& x, const Sequence& y,
                                 const Sequence& q, std::size_t memory_budget) {
  if (q.empty()) throw std::invalid_argument("exclusion string must be nonempty");
  const std::size_t n = x.size(), m = y.size(), t = q.size();
  require_capacity(ForwardTable::cell_count(n, m, t), sizeof(ExtLen),
                   memory_budget, "forward exclusion table");

  // Boundary row/column stays 0: the empty string avoids any nonempty Q[1:k].
  ForwardTable v(n, m, t);
  for (std::size_t i = 1; i <= n; ++i) {
    const char xi = x.symbol(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const bool match = xi == y.symbol(j);
      for (std::size_t k = 0; k <= t; ++k) {
        ExtLen value;
        if (!match) {
          value = max(v.at(i - 1, j, k), v.at(i, j - 1, k));
        } else if (k == 0 || xi != q.symbol(k)) {
          value = 1 + v.at(i - 1, j - 1, k);
        } else if (k == 1) {
          value = v.at(i - 1, j - 1, k);
        } else {
          value = max(1 + v.at(i - 1, j - 1, k - 1), v.at(i - 1, j - 1, k));
        }
        v.cells_[v.index(i, j, k)] = value;
        ++v.update_count_;
      }
    }
  }
  return v;
}

ReverseTable build_reverse_table(const Sequence& x, const Sequence& y,
                                 const Sequence& q, std::size_t memory_budget) {
  if (q.empty()) throw std::invalid_argument("exclusion string must be nonempty");
  const std::size_t n = x.size(), m = y.size(), t = q.size();
  require_capacity(ReverseTable::cell_count(n, m, t), sizeof(ExtLen),
                   memory_budget, "reverse exclusion table");

  ReverseTable h(n, m, t);
  for (std::size_t i = n; i >= 1; --i) {
    const char xi = x.symbol(i);
    for (std::size_t j = m; j >= 1; --j) {
      const bool match = xi == y.symbol(j);
      for (std::size_t k = t; k >= 1; --k) {
        ExtLen value;
        if (!match) {
          value = max(h.at(i + 1, j, k), h.at(i, j + 1, k));
        } else if (xi != q.symbol(k)) {
          value = 1 + h.at(i + 1, j + 1, k);
        } else if (k == t) {
          value = h.at(i + 1, j + 1, k);
        } else {
          value = max(1 + h.at(i + 1, j + 1, k + 1), h.at(i + 1, j + 1, k));
        }
        h.cells_[h.index(i, j, k)] = value;
        ++h.update_count_;
      }
    }
  }
  return h;
}

std::string traceback_forward(const ForwardTable& v, const Sequence& x,
                              const Sequence& y, const Sequence& q,
                              std::size_t i, std::size_t j, std::size_t k) {
  if (i > v.n() || j > v.m() || k > v.t()) {
    throw std::out_of_range("traceback_forward: index outside the table");
  }
  std::string out;
  while (i >= 1 && j >= 1) {
    const char xi = x.symbol(i);
    if (xi != y.symbol(j)) {
      if (v.at(i - 1, j, k) >= v.at(i, j - 1, k)) {
        --i;
      } else {
        --j;
      }
    } else if (k == 0 || xi != q.symbol(k)) {
      out.push_back(xi);
      --i, --j;
    } else if (k == 1) {
      --i, --j;
    } else if (1 + v.at(i - 1, j - 1, k - 1) >= v.at(i - 1, j - 1, k)) {
      out.push_back(xi);
      --i, --j, --k;
    } else {
      --i, --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string traceback_reverse(const ReverseTable& h, const Sequence& x,
                              const Sequence& y, const Sequence& q,
                              std::size_t i, std::size_t j, std::size_t k) {
  if (i < 1 || j < 1 || k < 1 || i > h.n() + 1 || j > h.m() + 1 || k > h.t()) {
    throw std::out_of_range("traceback_reverse: index outside the table");
  }
  const std::size_t n = h.n(), m = h.m(), t = h.t();
  std::string out;
  while (i <= n && j <= m) {
    const char xi = x.symbol(i);
    if (xi != y.symbol(j)) {
      if (h.at(i + 1, j, k) >= h.at(i, j + 1, k)) {
        ++i;
      } else {
        ++j;
      }
    } else if (xi != q.symbol(k)) {
      out.push_back(xi);
      ++i, ++j;
    } else if (k == t) {
      ++i, ++j;
    } else if (1 + h.at(i + 1, j + 1, k + 1) >= h.at(i + 1, j + 1, k)) {
      out.push_back(xi);
      ++i, ++j, ++k;
    } else {
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace clcs
