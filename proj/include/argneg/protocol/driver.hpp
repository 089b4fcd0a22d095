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
#include <span>
#include <string>
#include <vector>

#include "argneg/common/diagnostics.hpp"
#include "argneg/dialogue/negotiation_log.hpp"
#include "argneg/providers/similarity.hpp"

namespace argneg::protocol {

struct ProtocolConfig {
    int round_cap = 3;
    double epsilon = 0.02;
    double similarity_tau = 0.85;
    std::vector<std::string> roster;

    // 0 < epsilon < 1, 0 < tau <= 1, round_cap >= 1; ConfigError otherwise.
    void validate() const;
    nlohmann::json snapshot() const;
};

enum class Role { focus, peer };

struct AgentState {
    std::string session_id;
    int round = 0;
    Role role = Role::focus;
    std::string focus_agent;
    // Turn the focus agent produced in the current slot, if any.
    std::optional<dialogue::Turn> focus_turn;
    std::vector<dialogue::Turn> transcript;
};

// What an agent says; the driver fills in indices and reference fields.
struct AgentTurn {
    dialogue::Act act = dialogue::Act::proposal;
    std::string content;
    std::string quality_dimension;
    std::string rationale;
    std::optional<dialogue::RoundStatus> status;
    std::vector<dialogue::SubGoal> subgoals;
    // A peer proposal accepting the focus turn.
    bool endorse = false;
};

class Agent {
public:
    virtual ~Agent() = default;
    virtual const std::string& name() const = 0;
    // nullopt passes the slot. May throw; the session is then aborted.
    virtual std::optional<AgentTurn> act(const std::string& project, const AgentState& state) = 0;
};

// One session. Every roster agent takes the focus slot once per round, in
// order; the others respond as peers. Stops when successive focus candidates
// are more similar than 1 - epsilon, or after round_cap rounds.
//   critique   -> targets the current focus turn
//   refinement -> supersedes the agent's latest candidate and resolves open
//                 critiques aimed at the agent's candidates
//   endorse    -> endorses the current focus turn
dialogue::Session run_session(const std::string& session_id, const std::string& project, std::span<Agent* const> agents,
                              const ProtocolConfig& config, const providers::SimilarityProvider& similarity,
                              Warnings* diagnostics = nullptr);

dialogue::NegotiationLog run_negotiation(const std::string& project, std::span<Agent* const> agents,
                                         const ProtocolConfig& config,
                                         const providers::SimilarityProvider& similarity,
                                         const std::string& session_id = "session-1",
                                         Warnings* diagnostics = nullptr);

}  // namespace argneg::protocol
