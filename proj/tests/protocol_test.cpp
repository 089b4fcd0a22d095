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

#include <gtest/gtest.h>

#include "argneg/common/errors.hpp"
#include "argneg/protocol/conflict_detection.hpp"
#include "argneg/protocol/scripted_agent.hpp"
#include "fixtures.hpp"

using namespace argneg;
using namespace argneg::protocol;
using dialogue::Act;

namespace {

AgentTurn say(Act act, std::string content, bool endorse = false) {
    AgentTurn t;
    t.act = act;
    t.content = std::move(content);
    t.quality_dimension = "Safety";
    t.rationale = "r";
    t.endorse = endorse;
    return t;
}

class ThrowingAgent final : public Agent {
public:
    explicit ThrowingAgent(int fail_round) : fail_round_(fail_round) {}
    const std::string& name() const override { return name_; }
    std::optional<AgentTurn> act(const std::string&, const AgentState& s) override {
        if (s.round == fail_round_) throw ProviderError("model endpoint unavailable");
        if (s.role == Role::focus) return say(Act::proposal, "round " + std::to_string(s.round) + " text");
        return std::nullopt;
    }

private:
    std::string name_ = "Flaky";
    int fail_round_;
};

class ThrowingSimilarity final : public providers::SimilarityProvider {
public:
    double similarity(std::string_view, std::string_view) const override { throw ProviderError("down"); }
};

}  // namespace

TEST(DetectConflicts, LatencyPairTriggersDebate) {
    const std::vector<std::string> c{"fusion within 500 ms", "fusion within 30 ms"};
    providers::ConstantSimilarity sim(0.9);
    const auto d = detect_conflicts(c, sim, ConstantLabeler(ConflictLabel::resource_bound), 0.85);
    ASSERT_EQ(d.flagged.size(), 1u);
    EXPECT_EQ(d.flagged[0].label, ConflictLabel::resource_bound);
    EXPECT_TRUE(d.flagged[0].debate);
}

TEST(DetectConflicts, BelowTauNotFlagged) {
    const std::vector<std::string> c{"a", "b"};
    providers::ConstantSimilarity sim(0.5);
    EXPECT_TRUE(detect_conflicts(c, sim, ConstantLabeler(ConflictLabel::resource_bound), 0.85).flagged.empty());
}

TEST(DetectConflicts, RedundantIsConsolidated) {
    const std::vector<std::string> c{"log every fault", "log every fault event"};
    providers::ConstantSimilarity sim(0.95);
    const auto d = detect_conflicts(c, sim, ConstantLabeler(ConflictLabel::redundant), 0.85);
    ASSERT_EQ(d.flagged.size(), 1u);
    EXPECT_FALSE(d.flagged[0].debate);
}

TEST(DetectConflicts, ErrorsAndProviderFailure) {
    const std::vector<std::string> one{"a"};
    providers::ConstantSimilarity sim(0.9);
    EXPECT_THROW(detect_conflicts(one, sim, ConstantLabeler(ConflictLabel::redundant), 0.85), InputError);
    const std::vector<std::string> two{"a", "b"};
    const auto d = detect_conflicts(two, ThrowingSimilarity{}, ConstantLabeler(ConflictLabel::redundant), 0.85);
    EXPECT_TRUE(d.flagged.empty());
    EXPECT_EQ(d.diagnostics.at(0).code, "provider_failure");
    EXPECT_EQ(parse_conflict_label("logical_incompatibility"), ConflictLabel::logical_incompatibility);
}

TEST(ProtocolConfig, Validation) {
    ProtocolConfig c;
    EXPECT_NO_THROW(c.validate());
    c.epsilon = 0.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.round_cap = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.similarity_tau = 1.5;
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Driver, ScriptedRunReproducesGoldenLog) {
    const auto scenario = load_scenario(testutil::data_path("ad_sensor_fusion_script.json"));
    Warnings diag;
    const auto log = run_scenario(scenario, providers::TokenCosineSimilarity{}, &diag);
    EXPECT_TRUE(diag.empty());
    EXPECT_EQ(log, testutil::golden_log(/*with_semantic=*/false));
    EXPECT_NO_THROW(dialogue::validate(log));
}

TEST(Driver, Reproducible) {
    const auto scenario = load_scenario(testutil::data_path("ad_sensor_fusion_script.json"));
    EXPECT_EQ(dialogue::serialize_log(run_scenario(scenario, providers::TokenCosineSimilarity{})),
              dialogue::serialize_log(run_scenario(scenario, providers::TokenCosineSimilarity{})));
}

TEST(Driver, ConvergesEarlyOnIdenticalCandidates) {
    ScriptedAgent a("A", {{1, {say(Act::proposal, "same text")}},
                          {2, {say(Act::refinement, "same text")}},
                          {3, {say(Act::refinement, "third")}}});
    ScriptedAgent b("B", {{1, {say(Act::critique, "no")}}});
    std::vector<Agent*> agents{&a, &b};
    const auto log = run_negotiation("p", agents, {}, providers::ConstantSimilarity(1.0));
    const auto& s = log.sessions.at(0);
    EXPECT_EQ(s.termination, dialogue::Termination::converged);
    EXPECT_EQ(s.turns.back().round, 2);
}

TEST(Driver, SingleRoundCap) {
    ScriptedAgent a("A", {{1, {say(Act::proposal, "x")}}, {2, {say(Act::refinement, "y")}}});
    ScriptedAgent b("B", {});
    std::vector<Agent*> agents{&a, &b};
    ProtocolConfig cfg;
    cfg.round_cap = 1;
    const auto log = run_negotiation("p", agents, cfg, providers::ConstantSimilarity(0.0));
    EXPECT_EQ(log.sessions[0].turns.size(), 1u);
    EXPECT_EQ(log.sessions[0].termination, dialogue::Termination::round_cap);
}

TEST(Driver, EachAgentIsFocusOncePerRound) {
    struct Counting final : Agent {
        explicit Counting(std::string n) : n_(std::move(n)) {}
        const std::string& name() const override { return n_; }
        std::optional<AgentTurn> act(const std::string&, const AgentState& s) override {
            if (s.role == Role::focus) ++focus[s.round];
            return std::nullopt;
        }
        std::string n_;
        std::map<int, int> focus;
    };
    Counting a("A"), b("B"), c("C");
    std::vector<Agent*> agents{&a, &b, &c};
    (void)run_negotiation("p", agents, {}, providers::ConstantSimilarity(0.0));
    for (auto* x : {&a, &b, &c}) EXPECT_EQ(x->focus, (std::map<int, int>{{1, 1}, {2, 1}, {3, 1}}));
}

TEST(Driver, AgentFailureAbortsAndKeepsPartialLog) {
    ThrowingAgent flaky(2);
    std::vector<Agent*> agents{&flaky};
    Warnings diag;
    const auto log = run_negotiation("p", agents, {}, providers::ConstantSimilarity(0.0), "s", &diag);
    EXPECT_EQ(log.sessions[0].termination, dialogue::Termination::aborted);
    EXPECT_EQ(log.sessions[0].turns.size(), 1u);
    EXPECT_EQ(diag.at(0).code, "agent_failure");
}

TEST(Driver, RefinementWithoutReferenceBecomesProposal) {
    ScriptedAgent a("A", {{1, {say(Act::refinement, "x")}}});
    std::vector<Agent*> agents{&a};
    Warnings diag;
    const auto log = run_negotiation("p", agents, {}, providers::ConstantSimilarity(0.0), "s", &diag);
    EXPECT_EQ(log.sessions[0].turns.at(0).act, Act::proposal);
    EXPECT_EQ(diag.at(0).code, "refinement_without_reference");
}

TEST(Driver, RosterMismatchAndEmptyRoster) {
    ScriptedAgent a("A", {});
    std::vector<Agent*> agents{&a};
    ProtocolConfig cfg;
    cfg.roster = {"B"};
    EXPECT_THROW(run_negotiation("p", agents, cfg, providers::ConstantSimilarity(0.0)), ConfigError);
    EXPECT_THROW(run_negotiation("p", std::vector<Agent*>{}, {}, providers::ConstantSimilarity(0.0)), InputError);
}
