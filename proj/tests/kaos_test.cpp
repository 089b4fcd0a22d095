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

#include <algorithm>
#include <random>
#include <set>

#include "argneg/kaos/integrate.hpp"
#include "fixtures.hpp"

namespace af = argneg::af;
namespace dialogue = argneg::dialogue;
namespace resolve = argneg::resolve;
using namespace argneg::kaos;
using argneg::attacks::AttackGraph;
using argneg::providers::ConstantSimilarity;
using argneg::providers::TokenCosineSimilarity;

namespace {

struct Golden {
    AttackGraph graph;
    resolve::Resolution resolution;
};

Golden golden() {
    Golden g{testutil::golden_graph(), {}};
    g.resolution = resolve::resolve(g.graph, {});
    return g;
}

std::size_t count_level(const KaosGraph& k, Level l) {
    return std::count_if(k.goals.begin(), k.goals.end(), [&](const GoalNode& g) { return g.level == l; });
}

GoalNode goal(const char* id, Level level, const char* quality) {
    GoalNode g;
    g.goal_id = id;
    g.level = level;
    g.quality_dimension = quality;
    g.description = std::string("goal ") + id;
    g.rationale = "r";
    return g;
}

dialogue::Argument plain(const char* id, const char* content, const char* quality) {
    dialogue::Argument a;
    a.id = af::ArgumentId{id};
    a.act = dialogue::Act::proposal;
    a.content = content;
    a.quality = quality;
    a.agent = quality;
    a.source = {"s", 1, 1};
    return a;
}

resolve::AcceptedRequirement accepted_of(const dialogue::Argument& a) {
    return {a.content, a.id, a.quality, a.agent};
}

}  // namespace

TEST(KaosIntegrate, GoldenShapeIsOneStrategicThreeTacticalFourOperational) {
    auto g = golden();
    IntegrationConfig cfg;
    cfg.project = "Sensor fusion for an automated vehicle";
    auto build = integrate(g.resolution.accepted, g.graph, TokenCosineSimilarity{}, cfg);
    const auto& k = build.graph;
    EXPECT_EQ(count_level(k, Level::strategic), 1u);
    EXPECT_EQ(count_level(k, Level::tactical), 3u);
    EXPECT_EQ(count_level(k, Level::operational), 4u);
    EXPECT_FALSE(k.has_cycle());
    for (const auto& goal : k.goals) {
        if (goal.level == Level::tactical) EXPECT_GE(k.children(goal.goal_id).size(), 2u) << goal.goal_id;
        if (goal.level == Level::operational) {
            EXPECT_TRUE(k.children(goal.goal_id).empty());
            EXPECT_EQ(goal.merged_ancestors, std::vector<af::ArgumentId>{af::ArgumentId{"a1"}});
        }
    }
    EXPECT_TRUE(build.repairs.empty());
}

TEST(KaosIntegrate, ProvenanceCoversAcceptedSet) {
    auto g = golden();
    auto build = integrate(g.resolution.accepted, g.graph, TokenCosineSimilarity{}, {});
    std::set<af::ArgumentId> seen, expected;
    for (const auto& goal : build.graph.goals) {
        seen.insert(goal.provenance.begin(), goal.provenance.end());
        seen.insert(goal.merged_ancestors.begin(), goal.merged_ancestors.end());
    }
    for (const auto& r : g.resolution.accepted) expected.insert(r.argument);
    EXPECT_EQ(seen, expected);
}

TEST(KaosIntegrate, SingleRequirementGetsBridge) {
    AttackGraph graph;
    graph.arguments = {plain("a1", "Brake within 2 m", "Safety")};
    auto build = integrate({accepted_of(graph.arguments[0])}, graph, TokenCosineSimilarity{}, {});
    const auto& k = build.graph;
    EXPECT_EQ(count_level(k, Level::strategic), 1u);
    EXPECT_EQ(count_level(k, Level::tactical), 1u);
    EXPECT_EQ(count_level(k, Level::operational), 1u);
    for (const auto& l : k.links)
        EXPECT_EQ(rank(*k.find(l.parent)->level) - rank(*k.find(l.child)->level), 1);
}

TEST(KaosIntegrate, StubSimilarityOneMergesIntoOneGoal) {
    AttackGraph graph;
    graph.arguments = {plain("a1", "Log every decision", "Safety"), plain("a2", "Record all decisions", "Safety")};
    auto build = integrate({accepted_of(graph.arguments[0]), accepted_of(graph.arguments[1])}, graph,
                           ConstantSimilarity{1.0}, {});
    ASSERT_EQ(count_level(build.graph, Level::operational), 1u);
    auto op = std::find_if(build.graph.goals.begin(), build.graph.goals.end(),
                           [](const GoalNode& g) { return g.level == Level::operational; });
    EXPECT_EQ(op->provenance.size(), 2u);
}

TEST(KaosIntegrate, EmptyInputWarns) {
    auto build = integrate({}, AttackGraph{}, TokenCosineSimilarity{}, {});
    EXPECT_TRUE(build.graph.goals.empty());
    ASSERT_EQ(build.warnings.size(), 1u);
    EXPECT_EQ(build.warnings[0].code, "empty_requirements");
}

TEST(KaosLevels, BridgeInsertedForSkip) {
    KaosGraph k;
    k.goals = {goal("S", Level::strategic, "Safety"), goal("O", Level::operational, "Safety")};
    k.links = {{"S", "O", RefinementMode::OR}};
    EXPECT_EQ(enforce_levels(k), 1u);
    ASSERT_EQ(k.links.size(), 2u);
    EXPECT_EQ(k.find(k.links[0].child)->level, Level::tactical);
    EXPECT_EQ(k.links[1].mode, RefinementMode::OR);
    EXPECT_EQ(enforce_levels(k), 0u);
}

TEST(KaosRepair, TwoCycleEqualWeightsDropsLargerChild) {
    KaosGraph k;
    k.goals = {goal("S", Level::strategic, "Safety"), goal("A", Level::tactical, "Safety"),
               goal("B", Level::tactical, "Safety"), goal("O", Level::operational, "Safety")};
    k.links = {{"S", "A"}, {"A", "B"}, {"B", "A"}, {"A", "O"}, {"B", "O"}};
    auto out = repair_cycles(k, resolve::uniform_weights());
    ASSERT_EQ(out.repairs.size(), 1u);
    EXPECT_EQ(out.repairs[0].parent, "A");
    EXPECT_EQ(out.repairs[0].child, "B");
    EXPECT_EQ(out.repairs[0].reattached_to, "S");
    EXPECT_FALSE(out.graph.has_cycle());
}

TEST(KaosRepair, AcyclicIsIdentity) {
    KaosGraph k;
    k.goals = {goal("S", Level::strategic, "Safety"), goal("T", Level::tactical, "Safety"),
               goal("O", Level::operational, "Safety")};
    k.links = {{"S", "T"}, {"T", "O"}};
    auto out = repair_cycles(k, resolve::uniform_weights());
    EXPECT_EQ(out.graph, k);
    EXPECT_TRUE(out.repairs.empty());
}

TEST(KaosRepair, ThreeCycleDistinctWeightsSingleRemoval) {
    KaosGraph k;
    k.goals = {goal("S", Level::strategic, "Safety"), goal("X", Level::tactical, "Safety"),
               goal("Y", Level::tactical, "Efficiency"), goal("Z", Level::tactical, "Green")};
    k.links = {{"S", "X"}, {"X", "Y"}, {"Y", "Z"}, {"Z", "X"}};
    resolve::Weights w{{"safety", 0.5}, {"efficiency", 0.3}, {"green", 0.2}};
    auto out = repair_cycles(k, w);
    ASSERT_EQ(out.repairs.size(), 1u);
    EXPECT_EQ(out.repairs[0].parent, "Y");
    EXPECT_EQ(out.repairs[0].child, "Z");
    EXPECT_FALSE(out.graph.has_cycle());
    EXPECT_EQ(out.graph.links.size(), k.links.size());
}

TEST(KaosExport, JsonRoundTripAndXml) {
    auto g = golden();
    auto k = integrate(g.resolution.accepted, g.graph, TokenCosineSimilarity{}, {}).graph;
    nlohmann::json j = k;
    EXPECT_EQ(j.at("goals").at(0).at("level"), "Strategic");
    EXPECT_EQ(j.get<KaosGraph>(), k);
    auto xml = to_xml(k);
    EXPECT_NE(xml.find("<goalModel"), std::string::npos);
    EXPECT_NE(xml.find("level=\"Operational\""), std::string::npos);
    EXPECT_NE(xml.find("<ancestor argument=\"a1\""), std::string::npos);
}

TEST(KaosProperty, RandomInputsYieldLayeredDagWithFullProvenance) {
    std::mt19937_64 rng(7);
    const char* qualities[] = {"Safety", "Efficiency", "Green", "Trustworthiness", "Responsibility"};
    for (int trial = 0; trial < 200; ++trial) {
        AttackGraph graph;
        std::vector<resolve::AcceptedRequirement> acc;
        const int n = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            const std::string id = "a" + std::to_string(i + 1);
            auto a = plain(id.c_str(), ("text " + std::to_string(rng() % 4)).c_str(), qualities[rng() % 5]);
            if (i > 0 && rng() % 3 == 0) {
                a.act = dialogue::Act::refinement;
                a.supersedes = af::ArgumentId{"a" + std::to_string(1 + rng() % i)};
            }
            graph.arguments.push_back(a);
            if (rng() % 4 != 0) acc.push_back(accepted_of(a));
        }
        if (acc.empty()) continue;
        auto k = integrate(acc, graph, TokenCosineSimilarity{}, {}).graph;
        ASSERT_FALSE(k.has_cycle());
        std::set<af::ArgumentId> seen, expected;
        for (const auto& r : acc) expected.insert(r.argument);
        for (const auto& goal : k.goals) {
            seen.insert(goal.provenance.begin(), goal.provenance.end());
            seen.insert(goal.merged_ancestors.begin(), goal.merged_ancestors.end());
            if (k.children(goal.goal_id).empty()) EXPECT_EQ(goal.level, Level::operational);
            if (goal.level != Level::strategic) EXPECT_FALSE(k.parents(goal.goal_id).empty());
        }
        EXPECT_EQ(seen, expected);
        for (const auto& l : k.links)
            EXPECT_EQ(rank(*k.find(l.parent)->level) - rank(*k.find(l.child)->level), 1);
    }
}
