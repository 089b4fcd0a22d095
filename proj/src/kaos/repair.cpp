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

#include <algorithm>
#include <set>

#include "argneg/kaos/integrate.hpp"

namespace argneg::kaos {

namespace {

double weight_of(const KaosGraph& g, const std::string& id, const resolve::Weights& w) {
    const auto* goal = g.find(id);
    if (!goal) return 0.0;
    auto it = w.find(resolve::axis_key(goal->quality_dimension));
    return it == w.end() ? 0.0 : it->second;
}

// Strategic goal reachable upward from `from`; falls back to the first Strategic goal.
std::optional<std::string> strategic_root(const KaosGraph& g, const std::string& from) {
    std::vector<std::string> frontier{from};
    std::set<std::string> seen{from};
    std::vector<std::string> found;
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& id : frontier) {
            const auto* goal = g.find(id);
            if (goal && goal->level == Level::strategic) found.push_back(id);
            for (const auto& p : g.parents(id))
                if (seen.insert(p).second) next.push_back(p);
        }
        if (!found.empty()) return *std::min_element(found.begin(), found.end());
        frontier = std::move(next);
    }
    for (const auto& goal : g.goals)
        if (goal.level == Level::strategic) return goal.goal_id;
    return std::nullopt;
}

}  // namespace

KaosBuild repair_cycles(KaosGraph graph, const resolve::Weights& weights) {
    KaosBuild out;
    const std::size_t budget = graph.links.size() + graph.goals.size() + 1;
    for (std::size_t step = 0; step < budget; ++step) {
        const auto cycle = graph.find_cycle();
        if (cycle.empty()) break;
        std::size_t pick = 0;
        for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
            const double wi = weight_of(graph, cycle[i + 1], weights);
            const double wp = weight_of(graph, cycle[pick + 1], weights);
            if (wi < wp || (wi == wp && cycle[i + 1] > cycle[pick + 1])) pick = i;
        }
        const std::string parent = cycle[pick], child = cycle[pick + 1];
        auto it = std::find_if(graph.links.begin(), graph.links.end(),
                               [&](const RefinementLink& l) { return l.parent == parent && l.child == child; });
        graph.links.erase(it);
        RepairEntry entry{parent, child, std::nullopt};
        const auto* goal = graph.find(child);
        if (graph.parents(child).empty() && goal && goal->level != Level::strategic) {
            if (auto root = strategic_root(graph, parent); root && *root != child) {
                graph.links.push_back({*root, child, RefinementMode::AND});
                entry.reattached_to = *root;
            }
        }
        out.repairs.push_back(std::move(entry));
    }
    if (graph.has_cycle()) {
        // Re-attachment kept closing cycles; drop remaining cycle edges without re-attaching.
        while (true) {
            const auto cycle = graph.find_cycle();
            if (cycle.empty()) break;
            const std::string parent = cycle[cycle.size() - 2], child = cycle.back();
            std::erase_if(graph.links, [&](const RefinementLink& l) { return l.parent == parent && l.child == child; });
            out.repairs.push_back({parent, child, std::nullopt});
        }
    }
    enforce_levels(graph);
    out.graph = std::move(graph);
    return out;
}

}  // namespace argneg::kaos
