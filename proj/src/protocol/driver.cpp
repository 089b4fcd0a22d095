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

#include "argneg/protocol/driver.hpp"

#include <algorithm>
#include <exception>

#include "argneg/common/errors.hpp"

namespace argneg::protocol {

using dialogue::Act;
using dialogue::Turn;
using dialogue::TurnRef;

void ProtocolConfig::validate() const {
    if (round_cap < 1) throw ConfigError("round cap must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
    if (!(similarity_tau > 0.0 && similarity_tau <= 1.0)) throw ConfigError("similarity tau must lie in (0,1]");
}

nlohmann::json ProtocolConfig::snapshot() const {
    return {{"round_cap", round_cap},
            {"epsilon", epsilon},
            {"similarity_tau", similarity_tau},
            {"convergence", "focus_candidate"}};
}

namespace {

bool is_candidate(const Turn& t) { return t.act == Act::proposal || t.act == Act::refinement; }

class SessionBuilder {
public:
    SessionBuilder(dialogue::Session& s, Warnings* diag) : s_(s), diag_(diag) {}

    const Turn& commit(const AgentTurn& said, const std::string& agent, int round, const std::optional<Turn>& focus) {
        Turn t;
        t.session_id = s_.id;
        t.round = round;
        t.turn_index = static_cast<int>(s_.turns.size()) + 1;
        t.agent = agent;
        t.act = said.act;
        t.content = said.content;
        t.quality_dimension = said.quality_dimension.empty() ? agent : said.quality_dimension;
        t.rationale = said.rationale;
        t.status = said.status;
        t.subgoals = said.subgoals;

        if (t.act == Act::critique) {
            if (focus && focus->agent != agent && is_candidate(*focus)) {
                t.targets.push_back(focus->ref());
            } else if (const Turn* other = latest_candidate([&](const Turn& x) { return x.agent != agent; })) {
                t.targets.push_back(other->ref());
            } else {
                note("critique_without_target", agent + " critiqued with nothing to target in round " +
                                                    std::to_string(round) + "; turn dropped");
                return empty_;
            }
        } else if (t.act == Act::refinement) {
            if (const Turn* own = latest_candidate([&](const Turn& x) { return x.agent == agent; }))
                t.supersedes = own->ref();
            t.resolves = open_critiques_against(agent);
            if (!t.supersedes && t.resolves.empty()) {
                t.act = Act::proposal;
                note("refinement_without_reference", agent + " refinement in round " + std::to_string(round) +
                                                         " has nothing to refine; recorded as a proposal");
            }
        }
        if (t.act == Act::proposal && said.endorse) {
            if (focus && focus->agent != agent) t.endorses = focus->ref();
            else note("endorse_without_focus", agent + " endorsed with no focus turn in round " + std::to_string(round));
        }
        s_.turns.push_back(std::move(t));
        return s_.turns.back();
    }

private:
    template <typename Pred>
    const Turn* latest_candidate(Pred pred) const {
        for (auto it = s_.turns.rbegin(); it != s_.turns.rend(); ++it)
            if (is_candidate(*it) && pred(*it)) return &*it;
        return nullptr;
    }

    std::vector<TurnRef> open_critiques_against(const std::string& agent) const {
        std::vector<TurnRef> out;
        for (const auto& c : s_.turns) {
            if (c.act != Act::critique) continue;
            const bool aimed = std::any_of(c.targets.begin(), c.targets.end(), [&](const TurnRef& r) {
                for (const auto& x : s_.turns)
                    if (x.ref() == r) return x.agent == agent;
                return false;
            });
            if (!aimed) continue;
            const bool resolved = std::any_of(s_.turns.begin(), s_.turns.end(), [&](const Turn& x) {
                return std::find(x.resolves.begin(), x.resolves.end(), c.ref()) != x.resolves.end();
            });
            if (!resolved) out.push_back(c.ref());
        }
        return out;
    }

    void note(std::string code, std::string msg) {
        if (diag_) diag_->push_back({std::move(code), s_.id + ": " + std::move(msg)});
    }

    dialogue::Session& s_;
    Warnings* diag_;
    const Turn empty_{};
};

}  // namespace

dialogue::Session run_session(const std::string& session_id, const std::string& project, std::span<Agent* const> agents,
                              const ProtocolConfig& config, const providers::SimilarityProvider& similarity,
                              Warnings* diagnostics) {
    config.validate();
    if (agents.empty()) throw InputError("agent roster is empty");
    std::vector<std::string> names;
    for (auto* a : agents) {
        if (!a) throw InputError("null agent in roster");
        names.push_back(a->name());
    }
    if (!config.roster.empty() && config.roster != names)
        throw ConfigError("agent roster does not match the configured order");

    dialogue::Session s;
    s.id = session_id;
    s.agents = names;
    SessionBuilder builder(s, diagnostics);
    std::optional<std::string> previous;

    auto ask = [&](Agent& agent, AgentState& st) -> std::optional<AgentTurn> {
        st.transcript = s.turns;
        return agent.act(project, st);
    };

    for (int round = 1; round <= config.round_cap; ++round) {
        std::optional<std::string> candidate;
        try {
            for (std::size_t f = 0; f < agents.size(); ++f) {
                AgentState st{session_id, round, Role::focus, names[f], std::nullopt, {}};
                std::optional<Turn> focus;
                if (auto said = ask(*agents[f], st)) {
                    const Turn& t = builder.commit(*said, names[f], round, std::nullopt);
                    if (t.turn_index > 0) {
                        focus = t;
                        if (is_candidate(t)) candidate = t.content;
                    }
                }
                for (std::size_t p = 0; p < agents.size(); ++p) {
                    if (p == f) continue;
                    AgentState peer{session_id, round, Role::peer, names[f], focus, {}};
                    if (auto said = ask(*agents[p], peer)) builder.commit(*said, names[p], round, focus);
                }
            }
        } catch (const std::exception& e) {
            s.termination = dialogue::Termination::aborted;
            if (diagnostics) diagnostics->push_back({"agent_failure", session_id + " round " + std::to_string(round) + ": " + e.what()});
            return s;
        }
        if (previous && candidate && similarity.similarity(*previous, *candidate) > 1.0 - config.epsilon) {
            s.termination = dialogue::Termination::converged;
            return s;
        }
        if (candidate) previous = candidate;
    }
    s.termination = dialogue::Termination::round_cap;
    return s;
}

dialogue::NegotiationLog run_negotiation(const std::string& project, std::span<Agent* const> agents,
                                         const ProtocolConfig& config,
                                         const providers::SimilarityProvider& similarity,
                                         const std::string& session_id, Warnings* diagnostics) {
    dialogue::NegotiationLog log;
    log.metadata.project = project;
    log.metadata.config = config.snapshot();
    log.sessions.push_back(run_session(session_id, project, agents, config, similarity, diagnostics));
    return log;
}

}  // namespace argneg::protocol
