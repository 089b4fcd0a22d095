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
#include <cmath>
#include <map>
#include <random>

#include "argneg/common/errors.hpp"
#include "argneg/kaos/integrate.hpp"
#include "argneg/verify/verifier.hpp"
#include "fixtures.hpp"

namespace af = argneg::af;
namespace kaos = argneg::kaos;
namespace providers = argneg::providers;
namespace resolve = argneg::resolve;
using namespace argneg::verify;
using argneg::ConfigError;

namespace {

struct Golden {
    argneg::attacks::AttackGraph graph;
    resolve::Resolution resolution;
    kaos::KaosGraph kaos;
};

Golden golden() {
    Golden g;
    g.graph = testutil::golden_graph();
    g.resolution = resolve::resolve(g.graph, {});
    kaos::IntegrationConfig cfg;
    cfg.project = "Sensor fusion for an automated vehicle";
    g.kaos = kaos::integrate(g.resolution.accepted, g.graph, providers::TokenCosineSimilarity{}, cfg).graph;
    return g;
}

bool has_rule(const std::vector<Violation>& vs, Rule r, Severity s) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == r && v.severity == s; });
}

kaos::GoalNode goal(const char* id, kaos::Level level) {
    kaos::GoalNode g;
    g.goal_id = id;
    g.level = level;
    g.quality_dimension = "Safety";
    g.description = std::string("goal ") + id;
    g.rationale = "r";
    return g;
}

// Maps whole texts to fixed vectors; anything else embeds to e0.
class TableEmbedder final : public providers::Embedder {
public:
    std::map<std::string, std::vector<double>> table;
    std::vector<double> embed(std::string_view text) const override {
        if (auto it = table.find(std::string(text)); it != table.end()) return it->second;
        return {1.0, 0.0};
    }
    std::size_t dimension() const override { return 2; }
};

// Every query sees the same similarity.
class FixedStore final : public VectorStore {
public:
    explicit FixedStore(double s) : s_(s) {}
    std::size_t size() const override { return 1; }
    const Passage& passage(std::size_t) const override { return p_; }
    std::optional<NearestMatch> nearest(std::span<const double>) const override { return NearestMatch{0, s_}; }

private:
    double s_;
    Passage p_{"p1", "ISO 26262", "3-7", "fixed passage"};
};

std::vector<Passage> corpus() { return {{"p1", "ISO 26262", "3-7", "sensor fusion latency and coverage"}}; }

providers::PredicateEntailment always(bool v) {
    return providers::PredicateEntailment([v](std::string_view, std::string_view) { return v; });
}

}  // namespace

TEST(Layer1, GoldenGoalModelIsClean) {
    auto g = golden();
    EXPECT_TRUE(layer1_structural_check(g.kaos, g.graph).empty());
}

TEST(Layer1, SchemaEmptyRationale) {
    auto g = golden();
    g.kaos.goals[1].rationale.clear();
    auto vs = layer1_structural_check(g.kaos, g.graph);
    ASSERT_TRUE(has_rule(vs, Rule::schema, Severity::error));
    EXPECT_EQ(vs[0].subject, g.kaos.goals[1].goal_id);
}

TEST(Layer1, DagSeededCycle) {
    auto g = golden();
    g.kaos.links.push_back({"O1", "T1", kaos::RefinementMode::AND});
    EXPECT_TRUE(has_rule(layer1_structural_check(g.kaos, g.graph), Rule::dag, Severity::error));
}

TEST(Layer1, RefinementLeafAboveOperational) {
    auto g = golden();
    g.kaos.goals.push_back(goal("T9", kaos::Level::tactical));
    g.kaos.links.push_back({"S1", "T9", kaos::RefinementMode::AND});
    auto vs = layer1_structural_check(g.kaos, g.graph);
    EXPECT_TRUE(has_rule(vs, Rule::refinement, Severity::error));
    EXPECT_FALSE(has_rule(vs, Rule::root_connectivity, Severity::error));
}

TEST(Layer1, SingleChildAndIsWarningOnly) {
    kaos::KaosGraph k;
    k.goals = {goal("S", kaos::Level::strategic), goal("T", kaos::Level::tactical), goal("O", kaos::Level::operational)};
    k.links = {{"S", "T"}, {"T", "O"}};
    auto vs = layer1_structural_check(k, {});
    ASSERT_EQ(vs.size(), 2u);
    EXPECT_FALSE(has_error(vs));
    EXPECT_TRUE(has_rule(vs, Rule::refinement, Severity::warning));
}

TEST(Layer1, RootConnectivityOrphan) {
    auto g = golden();
    g.kaos.goals.push_back(goal("O9", kaos::Level::operational));
    auto vs = layer1_structural_check(g.kaos, g.graph);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].rule, Rule::root_connectivity);
    EXPECT_EQ(vs[0].subject, "O9");
}

TEST(Layer1, CrossReferenceUnknownArgument) {
    auto g = golden();
    g.kaos.goals.back().provenance.push_back(af::ArgumentId{"a99"});
    auto vs = layer1_structural_check(g.kaos, g.graph);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].rule, Rule::cross_reference);
    EXPECT_EQ(vs[0].severity, Severity::error);
}

TEST(Verify, CycleBlocksLaterLayersAndKeepsContent) {
    auto g = golden();
    g.kaos.links.push_back({"O1", "T1", kaos::RefinementMode::AND});
    providers::HashedBagOfWordsEmbedder emb;
    auto ent = always(true);
    auto r = verify(g.kaos, g.graph, g.resolution.accepted, corpus(), {{"c1", "x", ""}}, {emb, ent});
    EXPECT_EQ(r.blocked_at, Layer::layer2);
    EXPECT_TRUE(r.hallucination_flags.empty());
    EXPECT_FALSE(r.compliance.gamma.has_value());
    EXPECT_EQ(r.content_digest_before, r.content_digest_after);
}

TEST(Verify, FlagBelowThresholdCarriesPassage) {
    kaos::KaosGraph k;
    k.goals = {goal("S", kaos::Level::strategic), goal("T", kaos::Level::tactical), goal("O", kaos::Level::operational)};
    k.links = {{"S", "T"}, {"T", "O"}};
    TableEmbedder emb;
    emb.table["goal O"] = {0.55, std::sqrt(1.0 - 0.55 * 0.55)};
    auto ent = always(true);
    auto r = verify(k, {}, {}, {{"p1", "ISO 26262", "3-7", "reference passage"}}, {}, {emb, ent});
    ASSERT_EQ(r.hallucination_flags.size(), 1u);
    EXPECT_EQ(r.hallucination_flags[0].goal_id, "O");
    EXPECT_NEAR(r.hallucination_flags[0].similarity, 0.55, 1e-12);
    EXPECT_EQ(r.hallucination_flags[0].nearest_passage, "reference passage");
    EXPECT_FALSE(r.compliance.gamma.has_value());
    EXPECT_TRUE(r.compliance.note.has_value());
}

TEST(Verify, ThresholdIsStrict) {
    auto g = golden();
    providers::HashedBagOfWordsEmbedder emb;
    FixedStore at(0.60), below(std::nextafter(0.60, 0.0));
    EXPECT_TRUE(hallucination_flags(g.kaos, emb, at, 0.60).empty());
    EXPECT_EQ(hallucination_flags(g.kaos, emb, below, 0.60).size(), g.kaos.goals.size());
}

TEST(Verify, GammaThreeOfFour) {
    auto g = golden();
    providers::HashedBagOfWordsEmbedder emb;
    providers::PredicateEntailment ent([](std::string_view clause, std::string_view) { return clause != "c4"; });
    std::vector<Clause> clauses{{"k1", "c1", ""}, {"k2", "c2", ""}, {"k3", "c3", ""}, {"k4", "c4", ""}};
    auto r = verify(g.kaos, g.graph, g.resolution.accepted, corpus(), clauses, {emb, ent});
    EXPECT_FALSE(r.blocked_at.has_value());
    EXPECT_EQ(r.compliance.applicable_clauses, 4u);
    EXPECT_EQ(r.compliance.satisfied, 3u);
    EXPECT_EQ(r.compliance.gamma, 0.75);
    EXPECT_EQ(r.compliance.clauses[0].satisfied_by, g.resolution.accepted[0].argument);
}

TEST(Verify, ApplicabilityFilter) {
    auto g = golden();
    providers::HashedBagOfWordsEmbedder emb;
    auto ent = always(true);
    std::vector<Clause> clauses{{"k1", "c1", "automotive"}, {"k2", "c2", "finance"}, {"k3", "c3", "*"}};
    VerifyConfig cfg;
    cfg.domain = "automotive";
    auto r = verify(g.kaos, g.graph, g.resolution.accepted, corpus(), clauses, {emb, ent}, cfg);
    EXPECT_EQ(r.compliance.applicable_clauses, 2u);
    EXPECT_EQ(r.compliance.gamma, 1.0);
}

TEST(Verify, EmptyCorpusIsConfigError) {
    auto g = golden();
    providers::HashedBagOfWordsEmbedder emb;
    auto ent = always(true);
    EXPECT_THROW(verify(g.kaos, g.graph, g.resolution.accepted, {}, {}, {emb, ent}), ConfigError);
}

TEST(VerifyProperty, GammaIsExactRatio) {
    std::mt19937_64 rng(11);
    auto g = golden();
    providers::HashedBagOfWordsEmbedder emb;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const std::size_t k = rng() % (n + 1);
        std::vector<Clause> clauses;
        for (std::size_t i = 0; i < n; ++i) clauses.push_back({"k" + std::to_string(i), i < k ? "yes" : "no", ""});
        providers::PredicateEntailment ent([](std::string_view c, std::string_view) { return c == "yes"; });
        auto r = verify(g.kaos, g.graph, g.resolution.accepted, corpus(), clauses, {emb, ent});
        ASSERT_TRUE(r.compliance.gamma.has_value());
        EXPECT_EQ(*r.compliance.gamma, static_cast<double>(k) / static_cast<double>(n));
        EXPECT_EQ(r.content_digest_before, r.content_digest_after);
    }
}

TEST(VerifyProperty, ParallelFlagsMatchSerial) {
    std::mt19937_64 rng(5);
    const std::vector<std::string> words{"sensor", "fusion", "latency", "brake", "energy", "audit", "privacy", "log"};
    auto sentence = [&] {
        std::string s;
        for (int i = 0; i < 5; ++i) s += words[rng() % words.size()] + " ";
        return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Passage> passages;
        for (int i = 0; i < 30; ++i) passages.push_back({"p" + std::to_string(i), "", "", sentence()});
        kaos::KaosGraph k;
        for (int i = 0; i < 40; ++i) {
            auto gn = goal(("O" + std::to_string(i)).c_str(), kaos::Level::operational);
            gn.description = sentence();
            k.goals.push_back(gn);
        }
        providers::HashedBagOfWordsEmbedder emb(64, static_cast<std::uint64_t>(trial));
        BruteForceStore store(passages, emb);
        EXPECT_EQ(hallucination_flags(k, emb, store, 0.8), hallucination_flags_serial(k, emb, store, 0.8));
    }
}

TEST(VerifyReport, JsonShape) {
    auto g = golden();
    providers::HashedBagOfWordsEmbedder emb;
    auto ent = always(false);
    auto r = verify(g.kaos, g.graph, g.resolution.accepted, corpus(), {{"k1", "c", ""}}, {emb, ent});
    nlohmann::json j = r;
    EXPECT_TRUE(j.at("blocked_at").is_null());
    EXPECT_EQ(j.at("compliance").at("gamma"), 0.0);
    EXPECT_EQ(j.at("content_digest_before"), j.at("content_digest_after"));
}
