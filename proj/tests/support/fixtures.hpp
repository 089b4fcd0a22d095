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

#include <map>
#include <string>
#include <vector>

#include "argneg/attacks/builder.hpp"
#include "argneg/dialogue/argument.hpp"
#include "argneg/dialogue/negotiation_log.hpp"
#include "argneg/providers/similarity.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) { return std::string(ARGNEG_DATA_DIR) + "/" + name; }

inline argneg::dialogue::NegotiationLog golden_log(bool with_semantic = true) {
    return argneg::dialogue::load_log(data_path(with_semantic ? "ad_sensor_fusion.json" : "ad_sensor_fusion_rules_only.json"));
}

// Single-session graph: extracted arguments, rule edges and gated recorded attacks.
inline argneg::attacks::AttackGraph graph_from_log(const argneg::dialogue::NegotiationLog& log,
                                                   argneg::attacks::GateConfig gate = {}) {
    argneg::attacks::AttackGraph g;
    g.arguments = argneg::dialogue::extract_arguments(log);
    g.attacks = argneg::attacks::rule_based_attacks(g.arguments, log).edges;
    for (auto& e : argneg::attacks::recorded_attacks(g.arguments, log, gate).edges) g.attacks.push_back(e);
    return g;
}

inline argneg::attacks::AttackGraph golden_graph(bool with_semantic = true) {
    return graph_from_log(golden_log(with_semantic));
}

// Two-session log plus one arbitration exchange: 8 arguments, one mutual pair.
inline argneg::attacks::AttackGraph arbitration_graph() {
    namespace at = argneg::attacks;
    const auto log = argneg::dialogue::load_log(data_path("arbitration_two_sessions.json"));
    at::AttackGraph g;
    g.arguments = argneg::dialogue::extract_arguments(log);
    g.attacks = at::rule_based_attacks(g.arguments, log).edges;
    std::map<std::string, std::vector<argneg::dialogue::Argument>> survivors;
    for (const auto& [s, ids] : at::survivors_by_session(g.arguments, g.attacks))
        for (const auto& id : ids) survivors[s].push_back(g.at(id));
    const auto r = at::cross_pair_arbitration(survivors, argneg::providers::TokenCosineSimilarity{}, 0.85, g.arguments);
    g.arguments.insert(g.arguments.end(), r.critiques.begin(), r.critiques.end());
    g.attacks.insert(g.attacks.end(), r.edges.begin(), r.edges.end());
    return g;
}

}  // namespace testutil
