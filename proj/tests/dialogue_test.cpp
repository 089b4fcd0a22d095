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
#include "argneg/dialogue/argument.hpp"
#include "fixtures.hpp"

using namespace argneg;
using namespace argneg::dialogue;
using af::operator""_arg;

namespace {

std::string one_session(const std::string& turns) {
    return R"({"sessions":[{"id":"s","agents":["A","B"],"turns":[)" + turns + "]}]}";
}

const char* kProposal =
    R"({"round":1,"turn_index":1,"agent":"A","act":"proposal","content":"p","quality_dimension":"Safety","rationale":"r"})";

}  // namespace

TEST(ParseLog, GoldenFixtureShape) {
    const auto log = testutil::golden_log();
    ASSERT_EQ(log.sessions.size(), 1u);
    const auto& s = log.sessions[0];
    EXPECT_EQ(s.turns.size(), 6u);
    EXPECT_EQ(s.turns.back().round, 3);
    EXPECT_EQ(s.turns[1].status, RoundStatus::unresolved);
    EXPECT_EQ(s.turns[3].status, RoundStatus::partial);
    EXPECT_EQ(s.turns[5].status, RoundStatus::resolved);
    EXPECT_EQ(s.termination, Termination::round_cap);
}

TEST(ParseLog, EmptySessionsIsValid) {
    const auto log = parse_log(R"({"sessions":[]})");
    EXPECT_TRUE(log.sessions.empty());
    EXPECT_TRUE(extract_arguments(log).empty());
}

TEST(ParseLog, MalformedDocumentReportsByteOffset) {
    try {
        parse_log(R"({"sessions": [)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(e.location().find("byte"), std::string::npos);
    }
}

TEST(ParseLog, WrongTypeReportsJsonPointer) {
    try {
        parse_log(one_session(R"({"round":"one","turn_index":1,"agent":"A","act":"proposal","content":"p","quality_dimension":"Safety"})"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.location(), "/sessions/0/turns/0/round");
    }
}

TEST(ParseLog, UnknownActIsParseError) {
    EXPECT_THROW(parse_log(one_session(R"({"round":1,"turn_index":1,"agent":"A","act":"vote","content":"p","quality_dimension":"Safety"})")),
                 ParseError);
}

TEST(ValidateLog, CritiqueWithoutTargets) {
    const std::string t = std::string(kProposal) +
                          R"(,{"round":1,"turn_index":2,"agent":"B","act":"critique","content":"c","quality_dimension":"Efficiency"})";
    EXPECT_THROW(parse_log(one_session(t)), ValidationError);
}

TEST(ValidateLog, DanglingReference) {
    const std::string t = std::string(kProposal) +
                          R"(,{"round":1,"turn_index":2,"agent":"B","act":"critique","content":"c","quality_dimension":"Efficiency","targets":[{"session":"s","turn_index":9}]})";
    EXPECT_THROW(parse_log(one_session(t)), ValidationError);
}

TEST(ValidateLog, DuplicateTurnIndex) {
    const std::string t = std::string(kProposal) + "," + kProposal;
    EXPECT_THROW(parse_log(one_session(t)), ValidationError);
}

TEST(ValidateLog, RefinementNeedsReference) {
    const std::string t = std::string(kProposal) +
                          R"(,{"round":2,"turn_index":2,"agent":"A","act":"refinement","content":"c","quality_dimension":"Safety"})";
    EXPECT_THROW(parse_log(one_session(t)), ValidationError);
}

TEST(ValidateLog, RoundCapOnlyWhenConfigured) {
    const std::string t =
        R"({"round":5,"turn_index":1,"agent":"A","act":"proposal","content":"p","quality_dimension":"Safety"})";
    EXPECT_NO_THROW(parse_log(one_session(t)));
    const std::string capped = R"({"metadata":{"config":{"round_cap":3}},"sessions":[{"id":"s","turns":[)" + t + "]}]}";
    EXPECT_THROW(parse_log(capped), ValidationError);
}

TEST(ValidateLog, AgentMustParticipate) {
    const std::string t =
        R"({"round":1,"turn_index":1,"agent":"Z","act":"proposal","content":"p","quality_dimension":"Safety"})";
    EXPECT_THROW(parse_log(one_session(t)), ValidationError);
}

TEST(Extract, GoldenTypesAndIds) {
    const auto args = extract_arguments(testutil::golden_log());
    ASSERT_EQ(args.size(), 6u);
    const std::vector<Act> expected{Act::proposal, Act::critique, Act::refinement,
                                    Act::critique, Act::refinement, Act::proposal};
    for (std::size_t i = 0; i < args.size(); ++i) {
        EXPECT_EQ(args[i].id.str(), "a" + std::to_string(i + 1));
        EXPECT_EQ(args[i].act, expected[i]);
    }
    EXPECT_EQ(args[1].targets, std::vector{"a1"_arg});
    EXPECT_EQ(args[4].supersedes, "a3"_arg);
    EXPECT_EQ(args[4].resolves, std::vector{"a4"_arg});
    EXPECT_EQ(args[5].endorses, "a5"_arg);
    EXPECT_EQ(args[0].agent, "Safety");
    EXPECT_EQ(args[1].quality, "Efficiency");
    EXPECT_EQ(args[4].source.round, 3);
}

TEST(Extract, TwoSessionsSessionQualifiedSources) {
    const auto log = load_log(testutil::data_path("arbitration_two_sessions.json"));
    const auto args = extract_arguments(log);
    ASSERT_EQ(args.size(), 6u);
    EXPECT_EQ(args[0].source.session_id, "s1-safety-efficiency");
    EXPECT_EQ(args[3].source.session_id, "s2-green-efficiency");
    EXPECT_EQ(args[3].source.turn_index, 1);
    EXPECT_EQ(args[3].id, "a4"_arg);
    EXPECT_EQ(args[5].supersedes, "a4"_arg);
}

TEST(Extract, EmptyRationaleWarns) {
    const std::string t =
        R"({"round":1,"turn_index":1,"agent":"A","act":"proposal","content":"p","quality_dimension":"Safety"})";
    Warnings w;
    const auto args = extract_arguments(parse_log(one_session(t)), &w);
    ASSERT_EQ(args.size(), 1u);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].code, "empty_rationale");
}

// serialize(parse(d)) parses back to the same log.
TEST(LogProperty, RoundTrip) {
    for (const char* f : {"ad_sensor_fusion.json", "ad_sensor_fusion_rules_only.json", "arbitration_two_sessions.json"}) {
        const auto log = load_log(testutil::data_path(f));
        EXPECT_EQ(parse_log(serialize_log(log)), log) << f;
        EXPECT_EQ(extract_arguments(log).size(), log.turn_count());
    }
}

TEST(ArgumentJson, RoundTrip) {
    for (const auto& a : extract_arguments(testutil::golden_log())) {
        nlohmann::json j = a;
        EXPECT_EQ(j.get<Argument>(), a);
    }
    EXPECT_THROW(nlohmann::json({{"id", "a1"}}).get<Argument>(), InputError);
}
