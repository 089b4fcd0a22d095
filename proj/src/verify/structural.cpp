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

#include "argneg/verify/structural.hpp"

#include <map>
#include <set>

namespace argneg::verify {

std::string_view to_string(Rule r) noexcept {
    switch (r) {
        case Rule::schema: return "schema";
        case Rule::dag: return "dag";
        case Rule::refinement: return "refinement";
        case Rule::root_connectivity: return "root_connectivity";
        case Rule::cross_reference: return "cross_reference";
    }
    return "schema";
}

std::string_view to_string(Severity s) noexcept { return s == Severity::error ? "error" : "warning"; }

void to_json(nlohmann::json& j, const Violation& v) {
    j = {{"rule", to_string(v.rule)}, {"severity", to_string(v.severity)}, {"subject", v.subject}, {"message", v.message}};
}

bool has_error(const std::vector<Violation>& violations) noexcept {
    for (const auto& v : violations)
        if (v.severity == Severity::error) return true;
    return false;
}

namespace {

std::string edge(const kaos::RefinementLink& l) { return l.parent + "->" + l.child; }

void check_schema(const kaos::KaosGraph& g, std::vector<Violation>& out) {
    std::set<std::string> ids;
    for (const auto& goal : g.goals) {
        const std::string subject = goal.goal_id.empty() ? "<unnamed>" : goal.goal_id;
        std::vector<std::string> missing;
        if (goal.goal_id.empty()) missing.push_back("goal_id");
        if (goal.description.empty()) missing.push_back("description");
        if (goal.quality_dimension.empty()) missing.push_back("quality_dimension");
        if (!goal.level) missing.push_back("level");
        if (goal.rationale.empty()) missing.push_back("rationale");
        for (const auto& m : missing) out.push_back({Rule::schema, Severity::error, subject, "missing " + m});
        if (!goal.goal_id.empty() && !ids.insert(goal.goal_id).second)
            out.push_back({Rule::schema, Severity::error, subject, "duplicate goal id"});
    }
    for (const auto& l : g.links) {
        if (!ids.count(l.parent)) out.push_back({Rule::schema, Severity::error, edge(l), "unknown parent goal"});
        if (!ids.count(l.child)) out.push_back({Rule::schema, Severity::error, edge(l), "unknown child goal"});
    }
}

void check_dag(const kaos::KaosGraph& g, std::vector<Violation>& out) {
    for (const auto& l : g.links)
        if (l.parent == l.child) out.push_back({Rule::dag, Severity::error, edge(l), "self-refinement"});
    const auto cycle = g.find_cycle();
    if (cycle.size() > 2) {
        std::string path;
        for (const auto& id : cycle) path += (path.empty() ? "" : "->") + id;
        out.push_back({Rule::dag, Severity::error, path, "refinement cycle"});
    }
}

void check_refinement(const kaos::KaosGraph& g, std::vector<Violation>& out) {
    std::map<std::string, std::vector<const kaos::RefinementLink*>> by_parent;
    for (const auto& l : g.links) {
        by_parent[l.parent].push_back(&l);
        const auto* p = g.find(l.parent);
        const auto* c = g.find(l.child);
        if (!p || !c || !p->level || !c->level || l.parent == l.child) continue;
        const int drop = kaos::rank(*p->level) - kaos::rank(*c->level);
        if (drop <= 0)
            out.push_back({Rule::refinement, Severity::error, edge(l), "child level is not below parent level"});
        else if (drop > 1)
            out.push_back({Rule::refinement, Severity::warning, edge(l), "link skips a level"});
    }
    for (const auto& goal : g.goals) {
        auto it = by_parent.find(goal.goal_id);
        if (it == by_parent.end()) {
            if (goal.level && *goal.level != kaos::Level::operational)
                out.push_back({Rule::refinement, Severity::error, goal.goal_id,
                               "leaf goal at " + std::string(kaos::to_string(*goal.level)) + " level"});
            continue;
        }
        std::size_t and_children = 0;
        for (const auto* l : it->second)
            if (l->mode == kaos::RefinementMode::AND) ++and_children;
        if (and_children == 1)
            out.push_back({Rule::refinement, Severity::warning, goal.goal_id, "single-child AND refinement"});
    }
}

void check_roots(const kaos::KaosGraph& g, std::vector<Violation>& out) {
    std::set<std::string> reached;
    std::vector<std::string> stack;
    for (const auto& goal : g.goals)
        if (goal.level == kaos::Level::strategic && reached.insert(goal.goal_id).second) stack.push_back(goal.goal_id);
    while (!stack.empty()) {
        const auto id = stack.back();
        stack.pop_back();
        for (const auto& c : g.children(id))
            if (reached.insert(c).second) stack.push_back(c);
    }
    for (const auto& goal : g.goals)
        if (!goal.goal_id.empty() && !reached.count(goal.goal_id))
            out.push_back({Rule::root_connectivity, Severity::error, goal.goal_id, "not reachable from a Strategic goal"});
}

void check_references(const kaos::KaosGraph& g, const attacks::AttackGraph& af_graph, std::vector<Violation>& out) {
    for (const auto& goal : g.goals) {
        for (const auto* ids : {&goal.provenance, &goal.merged_ancestors})
            for (const auto& id : *ids)
                if (!af_graph.find(id))
                    out.push_back({Rule::cross_reference, Severity::error, goal.goal_id,
                                   "argument " + id.str() + " is not in the argumentation graph"});
    }
}

}  // namespace

std::vector<Violation> layer1_structural_check(const kaos::KaosGraph& graph, const attacks::AttackGraph& af_graph) {
    std::vector<Violation> out;
    check_schema(graph, out);
    check_dag(graph, out);
    check_refinement(graph, out);
    check_roots(graph, out);
    check_references(graph, af_graph, out);
    return out;
}

}  // namespace argneg::verify
