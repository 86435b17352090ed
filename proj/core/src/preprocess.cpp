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

#include "clcs/preprocess.hpp"

namespace clcs {

std::size_t compact_end(const Sequence& seq, std::size_t i, const Sequence& p) {
  if (seq.symbol(i) != p.symbol(1)) return 0;
  std::size_t b = 2;
  std::size_t a = i + 1;
  for (; a <= seq.size() && b <= p.size(); ++a) {
    if (seq.symbol(a) == p.symbol(b)) ++b;
  }
  return b > p.size() ? a - 1 : 0;
}

std::size_t overlap_length(const Sequence& p, const Sequence& q, std::size_t k) {
  // a walks Q from k, b walks P from 1.
  std::size_t a = k, b = 1, r = 0;
  while (a <= q.size() && b <= p.size()) {
    if (q.symbol(a) == p.symbol(b)) {
      ++a;
      ++r;
    }
    ++b;
  }
  return r;
}

PrepTables build_prep(const Instance& instance) {
  PrepTables prep;
  prep.lx.assign(instance.n() + 1, 0);
  prep.ly.assign(instance.m() + 1, 0);
  prep.alpha.assign(instance.t() + 1, 0);
  for (std::size_t i = 1; i <= instance.n(); ++i) {
    prep.lx[i] = compact_end(instance.x(), i, instance.p());
  }
  for (std::size_t j = 1; j <= instance.m(); ++j) {
    prep.ly[j] = compact_end(instance.y(), j, instance.p());
  }
  for (std::size_t k = 1; k <= instance.t(); ++k) {
    prep.alpha[k] = overlap_length(instance.p(), instance.q(), k);
  }
  return prep;
}

}  // namespace clcs
