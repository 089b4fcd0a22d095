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
#include <string_view>
#include <vector>

#include "argneg/af/framework.hpp"

namespace argneg::kaos {

using af::ArgumentId;

enum class Level { strategic, tactical, operational };
enum class RefinementMode { AND, OR };

std::string_view to_string(Level l) noexcept;  // Strategic | Tactical | Operational
Level parse_level(std::string_view s);
std::string_view to_string(RefinementMode m) noexcept;
RefinementMode parse_refinement_mode(std::string_view s);
// Strategic = 3, Tactical = 2, Operational = 1.
int rank(Level l) noexcept;

struct GoalNode {
    std::string goal_id;
    std::string description;
    std::string quality_dimension;
    std::optional<Level> level;  // absent only in malformed input
    std::string rationale;
    std::vector<ArgumentId> provenance;
    std::vector<ArgumentId> merged_ancestors;

    bool operator==(const GoalNode&) const = default;
};

struct RefinementLink {
    std::string parent;
    std::string child;
    RefinementMode mode = RefinementMode::AND;

    bool operator==(const RefinementLink&) const = default;
};

struct KaosGraph {
    std::vector<GoalNode> goals;
    std::vector<RefinementLink> links;

    const GoalNode* find(std::string_view id) const;
    std::vector<std::string> children(std::string_view id) const;
    std::vector<std::string> parents(std::string_view id) const;
    bool has_cycle() const;
    // Goal ids on one directed cycle (first goal repeated at the end); empty when acyclic.
    std::vector<std::string> find_cycle() const;

    bool operator==(const KaosGraph&) const = default;
};

void to_json(nlohmann::json& j, const GoalNode& g);
void from_json(const nlohmann::json& j, GoalNode& g);
void to_json(nlohmann::json& j, const KaosGraph& k);
void from_json(const nlohmann::json& j, KaosGraph& k);

// Element-per-goal XML rendering of the goal tree.
std::string to_xml(const KaosGraph& k);

}  // namespace argneg::kaos
