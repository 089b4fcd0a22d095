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

#include "argneg/protocol/conflict_detection.hpp"

#include <exception>

#include "argneg/common/errors.hpp"

namespace argneg::protocol {

std::string_view to_string(ConflictLabel l) noexcept {
    switch (l) {
        case ConflictLabel::redundant: return "redundant";
        case ConflictLabel::resource_bound: return "resource_bound";
        case ConflictLabel::logical_incompatibility: return "logical_incompatibility";
    }
    return "redundant";
}

ConflictLabel parse_conflict_label(std::string_view s) {
    for (auto l : {ConflictLabel::redundant, ConflictLabel::resource_bound, ConflictLabel::logical_incompatibility})
        if (to_string(l) == s) return l;
    throw InputError("unknown conflict label '" + std::string(s) + "'");
}

Detection detect_conflicts(std::span<const std::string> candidates, const providers::SimilarityProvider& similarity,
                           const ConflictLabeler& labeler, double tau) {
    if (candidates.size() < 2) throw InputError("conflict detection needs at least two candidates");
    if (!(tau > 0.0 && tau <= 1.0)) throw ConfigError("tau must lie in (0,1]");
    Detection out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            try {
                const double sim = similarity.similarity(candidates[i], candidates[j]);
                if (sim < tau) continue;
                const ConflictLabel label = labeler.label(candidates[i], candidates[j]);
                out.flagged.push_back({i, j, sim, label, label != ConflictLabel::redundant});
            } catch (const std::exception& e) {
                out.diagnostics.push_back({"provider_failure", pair + ": " + e.what()});
            }
        }
    }
    return out;
}

}  // namespace argneg::protocol
