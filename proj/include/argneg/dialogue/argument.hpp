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
#include <vector>

#include "argneg/af/framework.hpp"
#include "argneg/common/diagnostics.hpp"
#include "argneg/dialogue/negotiation_log.hpp"

namespace argneg::dialogue {

struct SourceRef {
    std::string session_id;
    int round = 0;
    int turn_index = 0;

    bool operator==(const SourceRef&) const = default;
};

// <id, type, content, agent, quality, rationale> plus trace links back to the
// source turn and to the arguments its reference fields point at.
struct Argument {
    af::ArgumentId id;
    Act act = Act::proposal;
    std::string content;
    std::string agent;
    std::string quality;
    std::string rationale;
    SourceRef source;

    std::vector<af::ArgumentId> targets;
    std::optional<af::ArgumentId> supersedes;
    std::vector<af::ArgumentId> resolves;
    std::optional<af::ArgumentId> endorses;
    std::optional<RoundStatus> status;
    std::vector<SubGoal> subgoals;

    bool operator==(const Argument&) const = default;
};

void to_json(nlohmann::json& j, const Argument& a);
// Reads the export form; requires id, type, content, agent and quality.
void from_json(const nlohmann::json& j, Argument& a);

// Id assigned to each turn: a1, a2, ... in (session, turn) document order.
std::map<TurnRef, af::ArgumentId> turn_argument_ids(const NegotiationLog& log);

// One argument per turn, ids in global turn order. Empty rationales are kept
// and reported as warnings.
std::vector<Argument> extract_arguments(const NegotiationLog& log, Warnings* warnings = nullptr);

// Pluggable extraction step; the default reads the explicit act and reference fields.
class ArgumentExtractor {
public:
    virtual ~ArgumentExtractor() = default;
    virtual std::vector<Argument> extract(const NegotiationLog& log, Warnings& warnings) const = 0;
};

class ExplicitFieldExtractor final : public ArgumentExtractor {
public:
    std::vector<Argument> extract(const NegotiationLog& log, Warnings& warnings) const override {
        return extract_arguments(log, &warnings);
    }
};

}  // namespace argneg::dialogue
