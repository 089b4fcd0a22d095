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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argneg/common/diagnostics.hpp"
#include "argneg/providers/similarity.hpp"

namespace argneg::protocol {

enum class ConflictLabel { redundant, resource_bound, logical_incompatibility };

std::string_view to_string(ConflictLabel l) noexcept;
ConflictLabel parse_conflict_label(std::string_view s);

// Stage-2 provider: labels a pair already flagged by similarity.
class ConflictLabeler {
public:
    virtual ~ConflictLabeler() = default;
    virtual ConflictLabel label(std::string_view a, std::string_view b) const = 0;
};

class ConstantLabeler final : public ConflictLabeler {
public:
    explicit ConstantLabeler(ConflictLabel l) : label_(l) {}
    ConflictLabel label(std::string_view, std::string_view) const override { return label_; }

private:
    ConflictLabel label_;
};

struct FlaggedPair {
    std::size_t first = 0;
    std::size_t second = 0;
    double similarity = 0.0;
    ConflictLabel label = ConflictLabel::redundant;
    // Conflicts go to debate; redundant pairs are consolidated instead.
    bool debate = false;
};

struct Detection {
    std::vector<FlaggedPair> flagged;
    Warnings diagnostics;
};

// Stage 1 flags pairs with similarity >= tau, stage 2 labels them. Fewer than
// two candidates -> InputError. A failing provider skips the pair with a diagnostic.
Detection detect_conflicts(std::span<const std::string> candidates, const providers::SimilarityProvider& similarity,
                           const ConflictLabeler& labeler, double tau);

}  // namespace argneg::protocol
