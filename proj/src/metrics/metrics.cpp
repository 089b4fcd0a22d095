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

#include "argneg/metrics/metrics.hpp"

#include <algorithm>

#include "argneg/common/errors.hpp"

namespace argneg::metrics {

ScoreMatrix ScoreMatrix::build(const std::vector<std::string>& a, const std::vector<std::string>& b,
                               const providers::SimilarityProvider& scorer) {
    ScoreMatrix m{a, b, std::vector<std::vector<double>>(a.size(), std::vector<double>(b.size()))};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m.scores[i][j] = scorer.similarity(a[i], b[j]);
    return m;
}

void ScoreMatrix::validate() const {
    if (scores.size() != rows.size()) throw InputError("score matrix row count does not match the text list");
    for (const auto& r : scores) {
        if (r.size() != cols.size()) throw InputError("score matrix column count does not match the text list");
        for (double s : r)
            if (!(s >= 0.0 && s <= 1.0)) throw InputError("score outside [0,1]");
    }
}

Preservation semantic_preservation(const ScoreMatrix& m) {
    if (m.rows.empty() || m.cols.empty()) throw InputError("semantic preservation needs two non-empty lists");
    m.validate();
    const auto a = max_weight_assignment(m.scores);
    Preservation p;
    std::vector<char> used_a(m.rows.size(), 0), used_b(m.cols.size(), 0);
    for (auto [i, j] : a.pairs) {
        p.matches.push_back({i, j, m.scores[i][j]});
        used_a[i] = used_b[j] = 1;
    }
    p.score = a.total / static_cast<double>(a.pairs.size());
    for (std::size_t i = 0; i < used_a.size(); ++i)
        if (!used_a[i]) p.unmatched_a.push_back(i);
    for (std::size_t j = 0; j < used_b.size(); ++j)
        if (!used_b[j]) p.unmatched_b.push_back(j);
    return p;
}

Preservation semantic_preservation(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                   const providers::SimilarityProvider& scorer) {
    if (a.empty() || b.empty()) throw InputError("semantic preservation needs two non-empty lists");
    return semantic_preservation(ScoreMatrix::build(a, b, scorer));
}

void to_json(nlohmann::json& j, const Preservation& p) {
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& m : p.matches) matches.push_back({{"a", m.a}, {"b", m.b}, {"score", m.score}});
    j = {{"score", p.score}, {"matches", matches}, {"unmatched_a", p.unmatched_a}, {"unmatched_b", p.unmatched_b}};
}

namespace {

std::optional<std::size_t> selected_preferred_size(const resolve::Resolution& r, const attacks::AttackGraph& graph) {
    if (r.config.semantics == af::Semantics::preferred) return r.extension.size();
    if (r.preferred.empty()) return std::nullopt;
    if (r.config.strategy == resolve::PreferredStrategy::intersection) {
        return static_cast<std::size_t>(std::count_if(
            r.preferred[0].members.begin(), r.preferred[0].members.end(), [&](const af::ArgumentId& id) {
                return std::all_of(r.preferred.begin(), r.preferred.end(),
                                   [&](const af::Extension& e) { return e.contains(id); });
            }));
    }
    return r.preferred[resolve::select_priority(r.preferred, graph, r.config.weights)].size();
}

}  // namespace

RunStats run_stats(const resolve::Resolution& resolution, const attacks::AttackGraph& graph,
                   const af::GraphStats& stats, const kaos::KaosGraph* kaos) {
    RunStats s;
    s.arguments = stats.argument_count;
    s.attacks = stats.attack_count;
    s.grounded_size = resolution.grounded.size();
    s.preferred_size = selected_preferred_size(resolution, graph);
    s.tc = resolve::trace_completeness(resolution, graph);
    s.gci = stats.gci;
    s.pattern_mix = graph.origin_counts();
    s.depth = stats.depth;
    s.components = stats.component_count;
    for (const auto& [axis, w] : resolution.config.weights) s.axis_counts[axis] = 0;
    for (const auto& r : resolution.accepted) ++s.axis_counts[resolve::axis_key(r.quality)];
    bool first = true;
    for (const auto& [axis, w] : resolution.config.weights) {
        const auto c = s.axis_counts[axis];
        s.mac = first ? c : std::min(s.mac, c);
        first = false;
    }
    if (kaos) {
        for (auto l : {kaos::Level::strategic, kaos::Level::tactical, kaos::Level::operational})
            s.goal_levels[std::string(kaos::to_string(l))] = 0;
        for (const auto& g : kaos->goals)
            if (g.level) ++s.goal_levels[std::string(kaos::to_string(*g.level))];
    }
    return s;
}

void to_json(nlohmann::json& j, const RunStats& s) {
    auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(); };
    j = {{"arguments", s.arguments},
         {"attacks", s.attacks},
         {"grounded_size", s.grounded_size},
         {"preferred_size", opt(s.preferred_size)},
         {"tc", opt(s.tc)},
         {"gci", opt(s.gci)},
         {"pattern_mix", s.pattern_mix},
         {"depth", opt(s.depth)},
         {"components", s.components},
         {"axis_counts", s.axis_counts},
         {"mac", s.mac},
         {"goal_levels", s.goal_levels},
         {"metadata",
          {{"mac_formula", "MAC = min over configured quality axes of the number of accepted requirements on that axis"},
           {"not_computed", {"CU"}}}}};
}

}  // namespace argneg::metrics
