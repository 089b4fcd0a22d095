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

#include <optional>
#include <string>
#include <vector>

#include "argneg/attacks/attack_graph.hpp"
#include "argneg/common/diagnostics.hpp"
#include "argneg/kaos/goal_model.hpp"
#include "argneg/providers/similarity.hpp"
#include "argneg/resolve/resolver.hpp"

namespace argneg::kaos {

struct RepairEntry {
    std::string parent;
    std::string child;
    std::optional<std::string> reattached_to;
};

struct KaosBuild {
    KaosGraph graph;
    Warnings warnings;
    std::vector<RepairEntry> repairs;
};

struct IntegrationConfig {
    std::string project;
    double dedup_tau = 0.85;
    resolve::Weights weights = resolve::uniform_weights();
};

// Accepted requirements -> three-level goal DAG.
//   endorsement:  an accepted argument endorsing another accepted one joins its provenance
//   subsumption:  an accepted argument in another's supersedes lineage becomes its merged ancestor
//   dedup:        remaining pairs with similarity >= dedup_tau merge
// Structured sub-goals become Operational goals; Tactical goals group them per
// concern (or per quality dimension when no concerns are given); one Strategic
// root comes from the project description.
KaosBuild integrate(const std::vector<resolve::AcceptedRequirement>& accepted, const attacks::AttackGraph& graph,
                    const providers::SimilarityProvider& similarity, const IntegrationConfig& config);

// Inserts a Tactical bridge under every direct Strategic -> Operational link.
std::size_t enforce_levels(KaosGraph& graph);

// Breaks cycles one edge at a time: the cycle edge whose child has the lowest
// quality weight goes first (ties: lexicographically largest child id). An
// orphaned child is re-attached under the nearest Strategic root.
KaosBuild repair_cycles(KaosGraph graph, const resolve::Weights& weights);

}  // namespace argneg::kaos
