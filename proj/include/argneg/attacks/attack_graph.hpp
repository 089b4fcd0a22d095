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
#include <string>
#include <string_view>
#include <vector>

#include "argneg/af/framework.hpp"
#include "argneg/af/stats.hpp"
#include "argneg/dialogue/argument.hpp"

namespace argneg::attacks {

using af::ArgumentId;
using dialogue::Argument;

enum class Origin { p1, p2, p3, semantic, arbitration, manual };

std::string_view to_string(Origin o) noexcept;
Origin parse_origin(std::string_view s);
bool is_rule_based(Origin o) noexcept;

struct AttackEdge {
    ArgumentId attacker;
    ArgumentId target;
    Origin origin = Origin::manual;
    double confidence = 1.0;  // 1.0 for rule-based edges
    std::string rationale;
    // Arbitration edges: the synthesized critique that carries the objection.
    std::optional<ArgumentId> via;

    bool operator==(const AttackEdge&) const = default;
};

struct SupportEdge {
    ArgumentId supporter;
    ArgumentId supported;

    bool operator==(const SupportEdge&) const = default;
};

void to_json(nlohmann::json& j, const AttackEdge& e);
void from_json(const nlohmann::json& j, AttackEdge& e);

// Arguments plus labeled attack edges (the framework <A, R_att>) and optional support edges.
struct AttackGraph {
    std::vector<Argument> arguments;
    std::vector<AttackEdge> attacks;
    std::vector<SupportEdge> supports;

    // Throws InputError on unknown endpoints or duplicate argument ids.
    af::Framework framework() const;
    // Endpoint existence, one edge per ordered pair, no rule-based self-attacks.
    void validate() const;

    const Argument* find(const ArgumentId& id) const;
    const Argument& at(const ArgumentId& id) const;
    const AttackEdge* edge(const ArgumentId& attacker, const ArgumentId& target) const;
    std::vector<const AttackEdge*> incoming(const ArgumentId& id) const;
    std::vector<const AttackEdge*> outgoing(const ArgumentId& id) const;

    af::EdgeLabels labels() const;
    // Edge counts by origin; the counts sum to attacks.size().
    std::map<std::string, std::size_t> origin_counts() const;

    bool operator==(const AttackGraph&) const = default;
};

}  // namespace argneg::attacks
