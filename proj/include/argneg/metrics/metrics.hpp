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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argneg/af/stats.hpp"
#include "argneg/kaos/goal_model.hpp"
#include "argneg/metrics/assignment.hpp"
#include "argneg/providers/similarity.hpp"
#include "argneg/resolve/resolver.hpp"

namespace argneg::metrics {

struct ScoreMatrix {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<std::vector<double>> scores;

    static ScoreMatrix build(const std::vector<std::string>& a, const std::vector<std::string>& b,
                             const providers::SimilarityProvider& scorer);
    // Dimensions agree, entries in [0,1].
    void validate() const;
};

struct MatchedPair {
    std::size_t a = 0;
    std::size_t b = 0;
    double score = 0.0;
};

struct Preservation {
    double score = 0.0;  // mean over matched pairs
    std::vector<MatchedPair> matches;
    std::vector<std::size_t> unmatched_a;
    std::vector<std::size_t> unmatched_b;
};

Preservation semantic_preservation(const ScoreMatrix& m);
Preservation semantic_preservation(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                   const providers::SimilarityProvider& scorer);

void to_json(nlohmann::json& j, const Preservation& p);

struct RunStats {
    std::size_t arguments = 0;
    std::size_t attacks = 0;
    std::size_t grounded_size = 0;
    std::optional<std::size_t> preferred_size;  // selected preferred; absent past the search bound
    std::optional<double> tc;
    std::optional<double> gci;
    std::map<std::string, std::size_t> pattern_mix;
    std::optional<std::size_t> depth;
    std::size_t components = 0;
    std::map<std::string, std::size_t> axis_counts;  // every configured axis, zeros included
    std::size_t mac = 0;
    std::map<std::string, std::size_t> goal_levels;
};

// MAC = min over configured axes (resolution weights) of accepted requirements on that axis.
RunStats run_stats(const resolve::Resolution& resolution, const attacks::AttackGraph& graph,
                   const af::GraphStats& stats, const kaos::KaosGraph* kaos = nullptr);

// Includes a metadata block stating the MAC formula; CU is not reported.
void to_json(nlohmann::json& j, const RunStats& s);

}  // namespace argneg::metrics
