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

#include "argneg/protocol/scripted_agent.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "argneg/common/errors.hpp"

namespace argneg::protocol {

using nlohmann::json;

ScriptedAgent::ScriptedAgent(std::string name, std::map<int, std::vector<AgentTurn>> script) : name_(std::move(name)) {
    for (auto& [round, turns] : script) script_[round] = std::deque<AgentTurn>(turns.begin(), turns.end());
}

std::optional<AgentTurn> ScriptedAgent::act(const std::string&, const AgentState& state) {
    auto it = script_.find(state.round);
    if (it == script_.end() || it->second.empty()) return std::nullopt;
    AgentTurn t = std::move(it->second.front());
    it->second.pop_front();
    return t;
}

namespace {

AgentTurn parse_turn(const json& j) {
    AgentTurn t;
    t.act = dialogue::parse_act(j.at("act").get<std::string>());
    t.content = j.at("content").get<std::string>();
    t.quality_dimension = j.value("quality_dimension", std::string{});
    t.rationale = j.value("rationale", std::string{});
    if (j.contains("status")) t.status = dialogue::parse_round_status(j.at("status").get<std::string>());
    t.endorse = j.value("endorse", false);
    if (j.contains("subgoals")) {
        for (const auto& g : j.at("subgoals")) {
            dialogue::SubGoal sg;
            sg.description = g.at("description").get<std::string>();
            sg.quality_dimension = g.value("quality_dimension", std::string{});
            sg.concerns = g.value("concerns", std::vector<std::string>{});
            t.subgoals.push_back(std::move(sg));
        }
    }
    return t;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
    Scenario sc;
    try {
        sc.project = doc.value("project", std::string{});
        if (doc.contains("config")) {
            const auto& c = doc.at("config");
            sc.config.round_cap = c.value("round_cap", sc.config.round_cap);
            sc.config.epsilon = c.value("epsilon", sc.config.epsilon);
            sc.config.similarity_tau = c.value("similarity_tau", sc.config.similarity_tau);
        }
        for (const auto& sj : doc.at("sessions")) {
            SessionScript s;
            s.id = sj.at("id").get<std::string>();
            s.roster = sj.at("roster").get<std::vector<std::string>>();
            if (sj.contains("conflict_label")) s.conflict_label = sj.at("conflict_label").get<std::string>();
            for (const auto& block : sj.value("scripts", json::array())) {
                const auto agent = block.at("agent").get<std::string>();
                if (std::find(s.roster.begin(), s.roster.end(), agent) == s.roster.end())
                    throw InputError("scripted agent " + agent + " is not in the roster of " + s.id);
                auto& turns = s.turns[agent][block.at("round").get<int>()];
                for (const auto& tj : block.at("turns")) turns.push_back(parse_turn(tj));
            }
            sc.sessions.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw ParseError("scenario", e.what());
    }
    sc.config.validate();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    return parse_scenario(doc);
}

std::vector<std::unique_ptr<ScriptedAgent>> make_agents(const SessionScript& script) {
    std::vector<std::unique_ptr<ScriptedAgent>> out;
    for (const auto& name : script.roster) {
        auto it = script.turns.find(name);
        out.push_back(std::make_unique<ScriptedAgent>(
            name, it == script.turns.end() ? std::map<int, std::vector<AgentTurn>>{} : it->second));
    }
    return out;
}

dialogue::NegotiationLog run_scenario(const Scenario& scenario, const providers::SimilarityProvider& similarity,
                                      Warnings* diagnostics) {
    dialogue::NegotiationLog log;
    log.metadata.project = scenario.project;
    log.metadata.config = scenario.config.snapshot();
    for (const auto& s : scenario.sessions) {
        auto owned = make_agents(s);
        std::vector<Agent*> agents;
        for (auto& a : owned) agents.push_back(a.get());
        ProtocolConfig cfg = scenario.config;
        cfg.roster = s.roster;
        auto session = run_session(s.id, scenario.project, agents, cfg, similarity, diagnostics);
        session.conflict_label = s.conflict_label;
        log.sessions.push_back(std::move(session));
    }
    return log;
}

}  // namespace argneg::protocol
