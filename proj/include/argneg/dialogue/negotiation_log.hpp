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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace argneg::dialogue {

enum class Act { proposal, critique, refinement };
enum class RoundStatus { unresolved, partial, resolved };
enum class Termination { converged, round_cap, aborted };

std::string_view to_string(Act a) noexcept;
std::string_view to_string(RoundStatus s) noexcept;
std::string_view to_string(Termination t) noexcept;
Act parse_act(std::string_view s);
RoundStatus parse_round_status(std::string_view s);
Termination parse_termination(std::string_view s);

struct TurnRef {
    std::string session;
    int turn_index = 0;

    auto operator<=>(const TurnRef&) const = default;
    bool operator==(const TurnRef&) const = default;
};

// Structured decomposition a requirement turn may carry (agent output schema);
// `concerns` name the tactical goals the item serves.
struct SubGoal {
    std::string description;
    std::string quality_dimension;
    std::vector<std::string> concerns;

    bool operator==(const SubGoal&) const = default;
};

struct Turn {
    std::string session_id;
    int round = 0;
    int turn_index = 0;
    std::string agent;
    Act act = Act::proposal;
    std::string content;
    std::string quality_dimension;
    std::string rationale;
    std::vector<TurnRef> targets;        // critiques: what is rejected
    std::optional<TurnRef> supersedes;   // refinements: earlier version
    std::vector<TurnRef> resolves;       // refinements: critiques addressed
    std::optional<TurnRef> endorses;     // consensus acceptance of an earlier requirement
    std::optional<RoundStatus> status;
    std::vector<SubGoal> subgoals;

    TurnRef ref() const { return {session_id, turn_index}; }
    bool operator==(const Turn&) const = default;
};

struct Session {
    std::string id;
    std::vector<std::string> agents;
    std::vector<Turn> turns;
    std::optional<Termination> termination;
    std::optional<std::string> conflict_label;

    bool operator==(const Session&) const = default;
};

// Attack observed outside the rule patterns and recorded with the log
// (e.g. a classifier verdict captured during the run).
struct RecordedAttack {
    TurnRef attacker;
    TurnRef target;
    std::string origin;  // "semantic" | "manual"
    double confidence = 1.0;
    std::string rationale;

    bool operator==(const RecordedAttack&) const = default;
};

struct LogMetadata {
    std::string project;
    nlohmann::json config = nlohmann::json::object();

    bool operator==(const LogMetadata&) const = default;
};

struct NegotiationLog {
    std::vector<Session> sessions;
    LogMetadata metadata;
    std::vector<RecordedAttack> recorded_attacks;

    std::size_t turn_count() const;
    const Turn* find_turn(const TurnRef& ref) const;
    bool operator==(const NegotiationLog&) const = default;
};

// Parses and validates a log document. Throws ParseError for malformed JSON or
// wrong field types (location = byte offset or JSON pointer) and
// ValidationError for dangling references, duplicate turn indices and other
// schema invariants.
NegotiationLog parse_log(std::string_view document);
NegotiationLog log_from_json(const nlohmann::json& document);
NegotiationLog load_log(const std::string& path);

void validate(const NegotiationLog& log);

nlohmann::json to_json(const NegotiationLog& log);
std::string serialize_log(const NegotiationLog& log, int indent = 2);

nlohmann::json to_json(const TurnRef& ref);

}  // namespace argneg::dialogue
