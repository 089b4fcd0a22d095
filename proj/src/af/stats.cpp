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

#include "argneg/af/stats.hpp"

#include <algorithm>
#include <numeric>

namespace argneg::af {

std::vector<std::vector<std::size_t>> strongly_connected_components(const Framework& af) {
    const std::size_t n = af.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    std::size_t counter = 0;

    // (vertex, next successor position)
    std::vector<std::pair<std::size_t, std::size_t>> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& succ = af.targets_of(v);
            if (pos < succ.size()) {
                const std::size_t w = succ[pos++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                sccs.push_back(std::move(comp));
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                auto& parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return sccs;
}

bool has_cycle_ignoring_self_loops(const Framework& af) {
    const auto sccs = strongly_connected_components(af);
    return std::any_of(sccs.begin(), sccs.end(), [](const auto& c) { return c.size() > 1; });
}

std::optional<double> graph_cyclicity_index(const Framework& af) {
    if (af.empty()) return std::nullopt;
    std::size_t cyclic = 0;
    for (const auto& c : strongly_connected_components(af)) {
        if (c.size() > 1) cyclic += c.size();
    }
    return static_cast<double>(cyclic) / static_cast<double>(af.size());
}

namespace {

std::size_t weak_components(const Framework& af) {
    std::vector<std::size_t> parent(af.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t count = af.size();
    for (auto [a, b] : af.attack_pairs()) {
        const auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --count;
        }
    }
    return count;
}

// Longest path over a DAG via Kahn order; nullopt if any cycle (self-loops count).
std::optional<std::size_t> longest_path(const Framework& af) {
    const std::size_t n = af.size();
    std::vector<std::size_t> indeg(n, 0), dist(n, 0), order;
    for (auto [a, b] : af.attack_pairs()) ++indeg[b];
    for (std::size_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) order.push_back(i);
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t v = order[k];
        for (std::size_t w : af.targets_of(v)) {
            dist[w] = std::max(dist[w], dist[v] + 1);
            if (--indeg[w] == 0) order.push_back(w);
        }
    }
    if (order.size() != n) return std::nullopt;
    std::size_t best = 0;
    for (auto d : dist) best = std::max(best, d);
    return best;
}

}  // namespace

GraphStats graph_stats(const Framework& af, const EdgeLabels* labels) {
    GraphStats st;
    st.argument_count = af.size();
    st.attack_count = af.attack_count();
    st.depth = longest_path(af);
    st.component_count = weak_components(af);
    std::size_t cyclic = 0;
    for (const auto& comp : strongly_connected_components(af)) {
        if (comp.size() > 1) cyclic += comp.size();
        ArgumentIds ids;
        for (auto i : comp) ids.push_back(af.id(i));
        canonicalize(ids);
        st.scc_partition.push_back(std::move(ids));
    }
    std::sort(st.scc_partition.begin(), st.scc_partition.end());
    if (!af.empty()) st.gci = static_cast<double>(cyclic) / static_cast<double>(af.size());
    if (labels) {
        for (const auto& att : af.attacks()) {
            auto it = labels->find(att);
            ++st.label_counts[it == labels->end() ? std::string("unlabeled") : it->second];
        }
    }
    return st;
}

}  // namespace argneg::af
