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

#include "clcs/types.hpp"

#include <limits>
#include <sstream>

namespace clcs {

Instance::Instance(Sequence x, Sequence y, Sequence include, Sequence exclude)
    : x_(std::move(x)),
      y_(std::move(y)),
      p_(std::move(include)),
      q_(std::move(exclude)) {
  if (p_.empty()) {
    throw std::invalid_argument(
        "include constraint P must be nonempty (an empty P reduces the "
        "problem to SEQ-EC-LCS)");
  }
  if (q_.empty()) {
    throw std::invalid_argument(
        "exclude constraint Q must be nonempty (an empty Q reduces the "
        "problem to STR-IC-LCS)");
  }
}

std::ostream& operator<<(std::ostream& os, const Instance& instance) {
  return os << "X=\"" << instance.x() << "\" Y=\"" << instance.y()
            << "\" P=\"" << instance.p() << "\" Q=\"" << instance.q() << '"';
}

std::ostream& operator<<(std::ostream& os, ExtLen len) {
  if (len.is_neg_inf()) return os << "-inf";
  return os << len.value();
}

std::size_t checked_cells(std::initializer_list<std::size_t> extents) {
  std::size_t cells = 1;
  for (std::size_t extent : extents) {
    if (extent != 0 && cells > std::numeric_limits<std::size_t>::max() / extent) {
      throw CapacityError("table extent product overflows size_t");
    }
    cells *= extent;
  }
  return cells;
}

void require_capacity(std::size_t cells, std::size_t cell_bytes,
                      std::size_t budget, std::string_view what) {
  const std::size_t bytes = checked_cells({cells, cell_bytes});
  if (bytes > budget) {
    std::ostringstream msg;
    msg << what << " needs " << bytes << " bytes (" << cells
        << " cells), exceeding the memory budget of " << budget << " bytes";
    throw CapacityError(msg.str());
  }
}

}  // namespace clcs
