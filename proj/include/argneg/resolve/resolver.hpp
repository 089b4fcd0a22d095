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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argneg/af/framework.hpp"
#include "argneg/attacks/attack_graph.hpp"

namespace argneg::resolve {

using af::ArgumentId;
using attacks::AttackGraph;

enum class PreferredStrategy { intersection, priority_guided };

std::string_view to_string(PreferredStrategy s) noexcept;
// Accepts "intersection", "priority" and "priority_guided".
PreferredStrategy parse_preferred_strategy(std::string_view s);

// Quality axis (lowercase) -> weight.
using Weights = std::map<std::string, double>;

const std::vector<std::string>& quality_axes();
Weights uniform_weights();
Weights safety_critical_weights();
// "safety=0.3,efficiency=0.175,..." or a profile name ("uniform", "safety-critical").
Weights parse_weights(std::string_view arg);
std::string axis_key(std::string_view quality);

struct ResolutionConfig {
    af::Semantics semantics = af::Semantics::grounded;
    PreferredStrategy strategy = PreferredStrategy::priority_guided;
    Weights weights = uniform_weights();

    // Non-negative weights summing to 1 +- 1e-9.
    void validate() const;
};

enum class ArgStatus { accepted, rejected, undecided };
std::string_view to_string(ArgStatus s) noexcept;

struct DefenseStep {
    ArgumentId attacker;
    std::string attack_origin;
    std::optional<ArgumentId> defender;  // absent: no counter-attack inside E*
    std::string defense_origin;
    std::optional<ArgumentId> via;       // arbitration critique carrying the counter-attack
};

struct DefenseChain {
    ArgumentId root;
    std::vector<DefenseStep> steps;

    bool complete() const;
};

struct AcceptedRequirement {
    std::string content;
    ArgumentId argument;
    std::string quality;
    std::string agent;
};

struct Resolution {
    ResolutionConfig config;
    af::Extension grounded;
    // All preferred extensions in canonical order; empty when the framework exceeds the search bound.
    std::vector<af::Extension> preferred;
    af::Extension extension;  // E*
    std::vector<AcceptedRequirement> accepted;
    std::map<ArgumentId, ArgStatus> status;
    std::map<ArgumentId, DefenseChain> defense_chains;
    // Priority-guided selection had more than one weight-maximal extension.
    bool priority_tie = false;
    std::vector<std::string> notes;
};

Resolution resolve(const AttackGraph& graph, const ResolutionConfig& config);

double priority_score(const af::Extension& e, const AttackGraph& graph, const Weights& weights);
// Index of the weight-maximal extension, first in canonical order on ties.
std::size_t select_priority(std::span<const af::Extension> extensions, const AttackGraph& graph,
                            const Weights& weights, bool* tie = nullptr);

// Throws DomainError when `a` is not in `extension`.
DefenseChain defense_chain(const ArgumentId& a, const AttackGraph& graph, const af::Extension& extension);

// Complete: following supersedes links back from `a` reaches a proposal through
// resolvable ids, and every critique resolved (P3) by a chain member has a P1
// target inside the chain.
bool trace_complete(const ArgumentId& a, const AttackGraph& graph);
// Absent when R_acc is empty.
std::optional<double> trace_completeness(const Resolution& resolution, const AttackGraph& graph);

}  // namespace argneg::resolve
