/*
 * Copyright 2026 The argneg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace argneg::metrics {

struct Assignment {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col), sorted by row
    double total = 0.0;
};

// Maximum-total assignment over a rectangular matrix; exactly min(rows, cols)
// pairs. Hungarian method with potentials, O(n^2 m).
Assignment max_weight_assignment(const std::vector<std::vector<double>>& scores);

}  // namespace argneg::metrics
