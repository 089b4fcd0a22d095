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

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "argneg/protocol/driver.hpp"

namespace argneg::protocol {

// Replays turns keyed by round, in order, whenever asked to act. An exhausted
// round passes.
class ScriptedAgent final : public Agent {
public:
    ScriptedAgent(std::string name, std::map<int, std::vector<AgentTurn>> script);
    const std::string& name() const override { return name_; }
    std::optional<AgentTurn> act(const std::string& project, const AgentState& state) override;

private:
    std::string name_;
    std::map<int, std::deque<AgentTurn>> script_;
};

struct SessionScript {
    std::string id;
    std::vector<std::string> roster;
    std::optional<std::string> conflict_label;
    std::map<std::string, std::map<int, std::vector<AgentTurn>>> turns;  // agent -> round -> turns
};

struct Scenario {
    std::string project;
    ProtocolConfig config;
    std::vector<SessionScript> sessions;
};

// {"project": ..., "config": {...}, "sessions": [{"id", "roster", "conflict_label",
//   "scripts": [{"agent", "round", "turns": [{act, content, quality_dimension, rationale, status, subgoals, endorse}]}]}]}
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

std::vector<std::unique_ptr<ScriptedAgent>> make_agents(const SessionScript& script);

// Runs every session with fresh scripted agents and collects one log.
dialogue::NegotiationLog run_scenario(const Scenario& scenario, const providers::SimilarityProvider& similarity,
                                      Warnings* diagnostics = nullptr);

}  // namespace argneg::protocol
