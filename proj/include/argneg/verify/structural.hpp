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

#include <string>
#include <string_view>
#include <vector>

#include "argneg/attacks/attack_graph.hpp"
#include "argneg/kaos/goal_model.hpp"

namespace argneg::verify {

enum class Rule { schema, dag, refinement, root_connectivity, cross_reference };
enum class Severity { error, warning };

std::string_view to_string(Rule r) noexcept;
std::string_view to_string(Severity s) noexcept;

struct Violation {
    Rule rule = Rule::schema;
    Severity severity = Severity::error;
    std::string subject;  // goal id, or "parent->child" for links and cycles
    std::string message;

    bool operator==(const Violation&) const = default;
};

void to_json(nlohmann::json& j, const Violation& v);

// The five deterministic rules, in rule order:
//   schema             every goal carries id, description, quality, level and rationale; ids unique; links resolve
//   dag                no directed cycle, no self-link
//   refinement         links descend; leaves are Operational (error); level skips and single-child AND (warning)
//   root_connectivity  every goal is reachable from a Strategic goal
//   cross_reference    provenance and ancestor ids exist in the argumentation graph
std::vector<Violation> layer1_structural_check(const kaos::KaosGraph& graph, const attacks::AttackGraph& af_graph);

bool has_error(const std::vector<Violation>& violations) noexcept;

}  // namespace argneg::verify
