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

#include "argneg/kaos/integrate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace argneg::kaos {

namespace {

struct Group {
    std::size_t rep = 0;
    std::vector<ArgumentId> provenance;
    std::vector<ArgumentId> ancestors;
};

struct OpDraft {
    GoalNode goal;
    std::vector<std::string> concerns;
};

void append(std::vector<ArgumentId>& into, const std::vector<ArgumentId>& from) {
    for (const auto& id : from)
        if (std::find(into.begin(), into.end(), id) == into.end()) into.push_back(id);
}

std::string majority_quality(const std::vector<std::string>& qualities) {
    std::map<std::string, int> count;
    for (const auto& q : qualities) ++count[q];
    std::string best;
    int best_n = 0;
    for (const auto& q : qualities)
        if (count[q] > best_n) best = q, best_n = count[q];
    return best;
}

}  // namespace

KaosBuild integrate(const std::vector<resolve::AcceptedRequirement>& accepted, const attacks::AttackGraph& graph,
                    const providers::SimilarityProvider& similarity, const IntegrationConfig& config) {
    KaosBuild out;
    if (accepted.empty()) {
        out.warnings.push_back({"empty_requirements", "no accepted requirements; goal model is empty"});
        return out;
    }
    const std::size_t n = accepted.size();
    std::map<ArgumentId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(accepted[i].argument, i);

    std::vector<std::size_t> owner(n);
    std::iota(owner.begin(), owner.end(), 0);
    std::vector<Group> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[i] = {i, {accepted[i].argument}, {}};
    auto root = [&](std::size_t i) {
        while (owner[i] != i) i = owner[i];
        return i;
    };
    auto absorb = [&](std::size_t into, std::size_t from, bool as_ancestor) {
        into = root(into);
        from = root(from);
        if (into == from) return;
        auto& dst = groups[into];
        auto& src = groups[from];
        append(as_ancestor ? dst.ancestors : dst.provenance, src.provenance);
        append(dst.ancestors, src.ancestors);
        owner[from] = into;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto* a = graph.find(accepted[i].argument);
        if (a && a->endorses) {
            if (auto it = index.find(*a->endorses); it != index.end()) absorb(it->second, i, false);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::set<ArgumentId> seen;
        const auto* a = graph.find(accepted[i].argument);
        while (a && a->supersedes && seen.insert(*a->supersedes).second) {
            if (auto it = index.find(*a->supersedes); it != index.end()) absorb(i, it->second, true);
            a = graph.find(*a->supersedes);
        }
    }
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < n; ++i)
        if (root(i) == i) alive.push_back(i);
    for (std::size_t x = 0; x < alive.size(); ++x) {
        for (std::size_t y = x + 1; y < alive.size(); ++y) {
            const std::size_t i = alive[x], j = alive[y];
            if (root(i) != i || root(j) != j) continue;
            if (similarity.similarity(accepted[i].content, accepted[j].content) >= config.dedup_tau) absorb(i, j, false);
        }
    }

    std::vector<OpDraft> ops;
    for (std::size_t i = 0; i < n; ++i) {
        if (root(i) != i) continue;
        const auto& g = groups[i];
        const auto& req = accepted[i];
        const auto* arg = graph.find(req.argument);
        if (arg && !arg->subgoals.empty()) {
            for (const auto& sg : arg->subgoals) {
                OpDraft d;
                d.goal.description = sg.description;
                d.goal.quality_dimension = sg.quality_dimension.empty() ? req.quality : sg.quality_dimension;
                d.goal.rationale = "Decomposes accepted requirement " + req.argument.str() + ": " + req.content;
                d.goal.provenance = g.provenance;
                d.goal.merged_ancestors = g.ancestors;
                d.concerns = sg.concerns;
                ops.push_back(std::move(d));
            }
        } else {
            OpDraft d;
            d.goal.description = req.content;
            d.goal.quality_dimension = req.quality;
            d.goal.rationale = arg && !arg->rationale.empty() ? arg->rationale : "Accepted requirement " + req.argument.str();
            d.goal.provenance = g.provenance;
            d.goal.merged_ancestors = g.ancestors;
            ops.push_back(std::move(d));
        }
    }

    KaosGraph& k = out.graph;
    GoalNode strategic;
    strategic.goal_id = "S1";
    strategic.level = Level::strategic;
    strategic.description = config.project.empty() ? "Satisfy the negotiated requirement set" : config.project;
    strategic.rationale = "Root goal synthesized from the project description";
    double best_weight = -1.0;
    for (const auto& d : ops) {
        auto it = config.weights.find(resolve::axis_key(d.goal.quality_dimension));
        const double w = it == config.weights.end() ? 0.0 : it->second;
        if (w > best_weight) best_weight = w, strategic.quality_dimension = d.goal.quality_dimension;
    }
    k.goals.push_back(strategic);

    std::vector<std::string> tactical_keys;
    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t o = 0; o < ops.size(); ++o) {
        std::vector<std::string> keys = ops[o].concerns;
        if (keys.empty()) keys.push_back("quality:" + ops[o].goal.quality_dimension);
        for (const auto& key : keys) {
            if (!members.count(key)) tactical_keys.push_back(key);
            auto& m = members[key];
            if (std::find(m.begin(), m.end(), o) == m.end()) m.push_back(o);
        }
    }
    for (std::size_t o = 0; o < ops.size(); ++o) ops[o].goal.goal_id = "O" + std::to_string(o + 1);
    for (std::size_t t = 0; t < tactical_keys.size(); ++t) {
        const auto& key = tactical_keys[t];
        GoalNode tg;
        tg.goal_id = "T" + std::to_string(t + 1);
        tg.level = Level::tactical;
        std::vector<std::string> qs;
        for (auto o : members[key]) qs.push_back(ops[o].goal.quality_dimension);
        tg.quality_dimension = majority_quality(qs);
        if (key.rfind("quality:", 0) == 0) {
            tg.description = "Satisfy the " + key.substr(8) + " concerns of the accepted requirements";
            tg.rationale = "Groups operational goals by quality dimension";
        } else {
            tg.description = key;
            tg.rationale = "Groups operational goals that address this concern";
        }
        k.goals.push_back(tg);
        k.links.push_back({strategic.goal_id, tg.goal_id, RefinementMode::AND});
        for (auto o : members[key]) k.links.push_back({tg.goal_id, ops[o].goal.goal_id, RefinementMode::AND});
    }
    for (auto& d : ops) {
        d.goal.level = Level::operational;
        k.goals.push_back(std::move(d.goal));
    }
    if (enforce_levels(k) > 0) out.warnings.push_back({"level_bridge", "inserted Tactical bridge goals"});
    if (k.has_cycle()) {
        auto repaired = repair_cycles(std::move(k), config.weights);
        out.graph = std::move(repaired.graph);
        out.repairs = std::move(repaired.repairs);
    }
    return out;
}

std::size_t enforce_levels(KaosGraph& graph) {
    std::size_t inserted = 0;
    std::vector<RefinementLink> links;
    for (const auto& l : graph.links) {
        const auto* p = graph.find(l.parent);
        const auto* c = graph.find(l.child);
        if (p && c && p->level == Level::strategic && c->level == Level::operational) {
            GoalNode bridge;
            bridge.goal_id = "T-bridge-" + c->goal_id;
            bridge.level = Level::tactical;
            bridge.quality_dimension = c->quality_dimension;
            bridge.description = "Tactical bridge for: " + c->description;
            bridge.rationale = "Inserted to keep the three-level hierarchy";
            links.push_back({l.parent, bridge.goal_id, RefinementMode::AND});
            links.push_back({bridge.goal_id, l.child, l.mode});
            graph.goals.push_back(std::move(bridge));
            ++inserted;
        } else {
            links.push_back(l);
        }
    }
    graph.links = std::move(links);
    return inserted;
}

}  // namespace argneg::kaos
