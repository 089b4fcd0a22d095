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
#include "argneg/common/text.hpp"
#include "argneg/providers/classifier.hpp"
#include "argneg/providers/embedder.hpp"
#include "argneg/providers/entailment.hpp"
#include "argneg/providers/similarity.hpp"

using namespace argneg;
using namespace argneg::providers;
using af::operator""_arg;

namespace {

dialogue::Argument arg(const char* id, const char* content = "x") {
    dialogue::Argument a;
    a.id = af::ArgumentId{id};
    a.content = content;
    return a;
}

}  // namespace

TEST(Text, Tokenize) {
    EXPECT_EQ(text::tokenize("Fusion <= 30 ms, FAST-path!"),
              (std::vector<std::string>{"fusion", "30", "ms", "fast", "path"}));
    EXPECT_EQ(text::split_list(" a1, b2 ,,c "), (std::vector<std::string>{"a1", "b2", "c"}));
}

TEST(Text, Fnv1aKnownVector) {
    // Published FNV-1a 64-bit test vector for "a".
    EXPECT_EQ(text::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(text::fnv1a(""), 0xcbf29ce484222325ULL);
}

TEST(TokenCosine, Values) {
    TokenCosineSimilarity s;
    EXPECT_DOUBLE_EQ(s.similarity("a b", "a b"), 1.0);
    EXPECT_DOUBLE_EQ(s.similarity("a", "b"), 0.0);
    // bags {a:1,b:1} and {a:1}: 1 / sqrt(2)
    EXPECT_NEAR(s.similarity("A b", "a"), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_DOUBLE_EQ(s.similarity("", "a"), 0.0);
}

TEST(TableSimilarity, UnorderedLookup) {
    TableSimilarity t(0.1);
    t.set("x", "y", 0.9);
    EXPECT_DOUBLE_EQ(t.similarity("y", "x"), 0.9);
    EXPECT_DOUBLE_EQ(t.similarity("x", "z"), 0.1);
}

TEST(Embedder, NormalisedAndDeterministic) {
    HashedBagOfWordsEmbedder e(64, 3);
    const auto v = e.embed("sensor fusion latency");
    ASSERT_EQ(v.size(), 64u);
    double n = 0;
    for (double x : v) n += x * x;
    EXPECT_NEAR(n, 1.0, 1e-12);
    EXPECT_EQ(v, e.embed("sensor fusion latency"));
    EXPECT_NEAR(cosine(v, e.embed("Sensor FUSION latency")), 1.0, 1e-12);
    const std::vector<double> zero(64, 0.0);
    EXPECT_EQ(cosine(v, zero), 0.0);
}

TEST(Classifier, SeededIsSymmetricInPairAndBounded) {
    SeededConfidenceClassifier c(101, 0.5, 0.84);
    for (int i = 0; i < 50; ++i) {
        auto a = arg(("a" + std::to_string(i)).c_str());
        auto b = arg(("b" + std::to_string(i)).c_str());
        const auto v1 = c.classify(a, b, {});
        const auto v2 = c.classify(b, a, {});
        EXPECT_EQ(v1.confidence, v2.confidence);
        EXPECT_GE(v1.confidence, 0.5);
        EXPECT_LE(v1.confidence, 0.84);
    }
    SeededConfidenceClassifier other(202, 0.5, 0.84);
    EXPECT_NE(c.classify(arg("a1"), arg("a4"), {}).confidence, other.classify(arg("a1"), arg("a4"), {}).confidence);
}

TEST(Classifier, TableDirections) {
    TableClassifier t;
    t.set("a6"_arg, "a2"_arg, {true, 0.9, "invalidates", false});
    const auto fwd = t.classify(arg("a6"), arg("a2"), {});
    EXPECT_TRUE(fwd.is_conflict);
    EXPECT_FALSE(fwd.symmetric);
    EXPECT_THROW(t.classify(arg("a2"), arg("a6"), {}), ProviderError);
    EXPECT_FALSE(t.classify(arg("a1"), arg("a2"), {}).is_conflict);
}

TEST(Classifier, TableFromJson) {
    auto t = TableClassifier::from_json(nlohmann::json::parse(R"([{"a":"a1","b":"a4","confidence":0.7}])"));
    const auto v = t.classify(arg("a4"), arg("a1"), {});
    EXPECT_TRUE(v.is_conflict);
    EXPECT_DOUBLE_EQ(v.confidence, 0.7);
}

TEST(Entailment, TokenCoverageRecordsFirstSatisfier) {
    TokenCoverageEntailment e(0.5);
    const std::vector<std::string> reqs{"unrelated text", "fusion completes within 30 ms", "fusion within 30 ms again"};
    const auto v = e.entails("Fusion within 30 ms", reqs);
    EXPECT_TRUE(v.satisfied);
    EXPECT_EQ(v.satisfying_index, 1u);
    EXPECT_FALSE(e.entails("battery thermal runaway", reqs).satisfied);
}
