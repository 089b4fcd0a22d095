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
#include <string>
#include <vector>

#include "argneg/providers/entailment.hpp"
#include "argneg/resolve/resolver.hpp"
#include "argneg/verify/nearest_neighbor.hpp"
#include "argneg/verify/structural.hpp"

namespace argneg::verify {

struct Clause {
    std::string clause_id;
    std::string text;
    std::string applicability;  // empty or "*" applies everywhere
};

// [{"clause_id": "...", "text": "...", "applicability": "automotive"}]
std::vector<Clause> load_clauses(const std::string& path);
std::vector<Clause> clauses_from_json(const nlohmann::json& j);

enum class Layer { layer1 = 1, layer2 = 2, layer3 = 3 };
std::string_view to_string(Layer l) noexcept;  // "Layer1" ...

struct ClauseResult {
    std::string clause_id;
    bool satisfied = false;
    std::optional<af::ArgumentId> satisfied_by;
    std::string rationale;
};

struct Compliance {
    std::size_t applicable_clauses = 0;
    std::size_t satisfied = 0;
    std::optional<double> gamma;
    std::vector<ClauseResult> clauses;
    std::optional<std::string> note;
};

struct VerificationReport {
    std::vector<Violation> violations;
    std::vector<HallucinationFlag> hallucination_flags;
    Compliance compliance;
    std::optional<Layer> blocked_at;
    std::string content_digest_before;
    std::string content_digest_after;
};

void to_json(nlohmann::json& j, const VerificationReport& r);

struct VerifyConfig {
    double tau_h = 0.60;
    std::string domain;  // clause applicability filter; empty keeps every clause
};

struct VerifyProviders {
    const providers::Embedder& embedder;
    const providers::EntailmentProvider& entailment;
    const VectorStore* store = nullptr;  // defaults to a brute-force scan of the corpus
};

// FNV-1a over each goal's id, description, quality, level and rationale.
std::string content_digest(const kaos::KaosGraph& graph);

bool clause_applies(const Clause& c, const std::string& domain);

// Layer 1 always runs. Any error-severity violation stops there with blocked_at = Layer2.
// Empty corpus -> ConfigError. No applicable clause -> gamma absent with a note.
VerificationReport verify(const kaos::KaosGraph& graph, const attacks::AttackGraph& af_graph,
                          const std::vector<resolve::AcceptedRequirement>& r_acc, const std::vector<Passage>& corpus,
                          const std::vector<Clause>& clauses, const VerifyProviders& providers,
                          const VerifyConfig& config = {});

}  // namespace argneg::verify
