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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "argneg/af/stats.hpp"
#include "argneg/attacks/builder.hpp"
#include "argneg/dialogue/negotiation_log.hpp"
#include "argneg/kaos/integrate.hpp"
#include "argneg/metrics/metrics.hpp"
#include "argneg/providers/classifier.hpp"
#include "argneg/providers/embedder.hpp"
#include "argneg/providers/entailment.hpp"
#include "argneg/resolve/what_if.hpp"
#include "argneg/verify/verifier.hpp"

namespace argneg::gateway {

struct PipelineConfig {
    std::optional<std::string> input;     // negotiation log
    std::optional<std::string> scenario;  // scripted-agent scenario
    attacks::GateConfig gate;
    bool semantic = true;                 // classify cross-session survivor pairs
    bool arbitration = false;
    double tau = 0.85;                    // arbitration overlap and KAOS dedup threshold
    resolve::ResolutionConfig resolution;
    std::optional<std::string> corpus;
    std::optional<std::string> clauses;
    std::string domain;
    double tau_h = 0.60;
    std::uint64_t seed = 101;
    std::vector<double> theta_sweep;

    // Exactly one of input/scenario, thresholds in [0,1], referenced files exist. ConfigError otherwise.
    void validate() const;
    nlohmann::json snapshot() const;
};

struct Providers {
    const providers::ConflictClassifier& classifier;
    const providers::SimilarityProvider& similarity;
    const providers::Embedder& embedder;
    const providers::EntailmentProvider& entailment;
};

struct GraphBuild {
    attacks::AttackGraph graph;
    Warnings diagnostics;
    std::size_t candidate_pairs = 0;
    std::vector<attacks::Overlap> overlaps;
};

// Arguments, rule edges, gated recorded attacks, gated classifier edges over
// cross-session survivors, then (optionally) one arbitration round.
GraphBuild build_graph(const dialogue::NegotiationLog& log, const PipelineConfig& config, const Providers& providers);

struct SweepRow {
    double theta = 0.0;
    double theta_eff = 0.0;
    std::size_t semantic_edges = 0;
    std::optional<double> gci;
    std::size_t grounded_size = 0;
    std::optional<std::size_t> preferred_size;
};

// One graph per theta with the floor lowered to 0, so theta_eff = theta.
std::vector<SweepRow> theta_sweep(const dialogue::NegotiationLog& log, const PipelineConfig& config,
                                  const Providers& providers, const std::vector<double>& thetas);

void to_json(nlohmann::json& j, const SweepRow& r);

struct PipelineResult {
    dialogue::NegotiationLog log;
    GraphBuild build;
    resolve::Resolution resolution;
    af::GraphStats stats;
    kaos::KaosBuild kaos;
    std::optional<verify::VerificationReport> verification;  // absent without a corpus
    metrics::RunStats run_stats;
    std::vector<SweepRow> sweep;
    Warnings diagnostics;
};

dialogue::NegotiationLog load_negotiation(const PipelineConfig& config, const providers::SimilarityProvider& similarity,
                                          Warnings* diagnostics = nullptr);

PipelineResult run_pipeline(const PipelineConfig& config, const Providers& providers);

}  // namespace argneg::gateway
