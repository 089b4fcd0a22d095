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

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "argneg/attacks/attack_graph.hpp"
#include "argneg/common/diagnostics.hpp"
#include "argneg/dialogue/negotiation_log.hpp"
#include "argneg/providers/classifier.hpp"
#include "argneg/providers/similarity.hpp"

namespace argneg::attacks {

struct EdgeSet {
    std::vector<AttackEdge> edges;
    Warnings warnings;
};

// Patterns over the explicit reference fields, intra-session only:
//   P1  critique -> each referenced target
//   P2  refinement -> superseded turn of the same agent
//   P3  refinement -> each resolved critique
// Edges are unique per ordered pair; the first pattern to claim a pair keeps it.
EdgeSet rule_based_attacks(std::span<const Argument> args, const dialogue::NegotiationLog& log);

// Proposal/refinement arguments of `session_id` with no incoming rule-based
// edge. Falls back to the latest refinement (highest round, then turn index)
// when every candidate is attacked.
struct Survivors {
    std::vector<ArgumentId> ids;
    Warnings warnings;
};
Survivors session_survivors(std::span<const Argument> args, std::span<const AttackEdge> rule_edges,
                            const std::string& session_id);

std::map<std::string, std::vector<ArgumentId>> survivors_by_session(std::span<const Argument> args,
                                                                    std::span<const AttackEdge> rule_edges,
                                                                    Warnings* warnings = nullptr);

struct GateConfig {
    double theta = 0.7;
    double theta_floor = 0.85;

    double effective() const noexcept { return theta > theta_floor ? theta : theta_floor; }
    // Throws ConfigError when either value lies outside [0,1].
    void validate() const;
};

struct CandidatePair {
    const Argument* first = nullptr;
    const Argument* second = nullptr;
};

// Unordered survivor pairs drawn from distinct sessions, in argument order.
std::vector<CandidatePair> cross_session_pairs(std::span<const Argument> args,
                                               const std::map<std::string, std::vector<ArgumentId>>& survivors);

struct SemanticResult {
    std::vector<AttackEdge> edges;
    Warnings diagnostics;
    std::size_t evaluated = 0;
    std::size_t flagged = 0;
};

// Classifies every pair (in parallel) and keeps verdicts with confidence >=
// theta_eff. Symmetric verdicts yield a mutual pair of edges, asymmetric ones a
// single edge first -> second. A throwing classifier skips the pair with a
// diagnostic. Throws InputError for a same-session pair.
SemanticResult semantic_conflict_edges(std::span<const CandidatePair> pairs,
                                       const providers::ConflictClassifier& classifier, const GateConfig& gate,
                                       const providers::ClassifierContext& ctx = {});
SemanticResult semantic_conflict_edges_serial(std::span<const CandidatePair> pairs,
                                              const providers::ConflictClassifier& classifier, const GateConfig& gate,
                                              const providers::ClassifierContext& ctx = {});

// Attacks recorded in the log. Semantic ones pass the same theta_eff gate; manual ones are kept.
EdgeSet recorded_attacks(std::span<const Argument> args, const dialogue::NegotiationLog& log, const GateConfig& gate);

struct Overlap {
    ArgumentId first;
    ArgumentId second;
    std::string first_session;
    std::string second_session;
    double similarity = 0.0;
};

struct ArbitrationResult {
    std::vector<Argument> critiques;
    std::vector<AttackEdge> edges;
    std::vector<Overlap> overlaps;
};

// One arbitration round over accepted arguments of different sessions. Each
// overlap (similarity >= tau) yields one critique per side and a mutual pair of
// `arbitration` edges between the overlapping arguments. New ids continue
// after the highest a<n> in `existing`.
ArbitrationResult cross_pair_arbitration(const std::map<std::string, std::vector<Argument>>& accepted_per_session,
                                         const providers::SimilarityProvider& overlap_detector, double tau,
                                         std::span<const Argument> existing);

// One warning per (supporter, attacker-of-supported) pair lacking the counter-attack.
Warnings validate_support(std::span<const SupportEdge> supports, std::span<const AttackEdge> attacks);

}  // namespace argneg::attacks
