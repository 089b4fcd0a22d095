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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argneg/af/framework.hpp"

namespace argneg::af {

struct GraphStats {
    std::size_t argument_count = 0;
    std::size_t attack_count = 0;
    // Longest directed path in edges; absent when the attack graph has a cycle (self-loops included).
    std::optional<std::size_t> depth;
    // Weakly connected components.
    std::size_t component_count = 0;
    std::vector<ArgumentIds> scc_partition;
    // Share of arguments inside SCCs of size > 1; absent for an empty framework.
    std::optional<double> gci;
    std::map<std::string, std::size_t> label_counts;
};

using EdgeLabels = std::map<Attack, std::string>;

// Tarjan's algorithm, iterative. Components are returned in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Framework& af);

bool has_cycle_ignoring_self_loops(const Framework& af);

std::optional<double> graph_cyclicity_index(const Framework& af);

GraphStats graph_stats(const Framework& af, const EdgeLabels* labels = nullptr);

}  // namespace argneg::af
