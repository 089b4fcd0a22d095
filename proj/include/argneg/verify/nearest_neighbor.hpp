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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argneg/kaos/goal_model.hpp"
#include "argneg/providers/embedder.hpp"

namespace argneg::verify {

struct Passage {
    std::string id;
    std::string standard;
    std::string clause;
    std::string text;
};

// [{"id": "...", "standard": "ISO 26262", "clause": "3-7.4", "text": "..."}]
std::vector<Passage> load_corpus(const std::string& path);
std::vector<Passage> corpus_from_json(const nlohmann::json& j);

struct NearestMatch {
    std::size_t passage = 0;
    double similarity = 0.0;
};

// Nearest-neighbour lookup over embedded passages. Implementations must tolerate concurrent queries.
class VectorStore {
public:
    virtual ~VectorStore() = default;
    virtual std::size_t size() const = 0;
    virtual const Passage& passage(std::size_t i) const = 0;
    // Highest cosine; the lowest index wins ties. Empty store -> nullopt.
    virtual std::optional<NearestMatch> nearest(std::span<const double> query) const = 0;
};

class BruteForceStore final : public VectorStore {
public:
    BruteForceStore(std::vector<Passage> passages, const providers::Embedder& embedder);

    std::size_t size() const override { return passages_.size(); }
    const Passage& passage(std::size_t i) const override { return passages_.at(i); }
    std::optional<NearestMatch> nearest(std::span<const double> query) const override;

private:
    std::vector<Passage> passages_;
    std::vector<std::vector<double>> vectors_;
};

struct HallucinationFlag {
    std::string goal_id;
    std::string passage_id;
    std::string nearest_passage;
    double similarity = 0.0;

    bool operator==(const HallucinationFlag&) const = default;
};

void to_json(nlohmann::json& j, const HallucinationFlag& f);

// One query per goal description; a goal is flagged when its best similarity is strictly below tau_h.
std::vector<HallucinationFlag> hallucination_flags(const kaos::KaosGraph& graph, const providers::Embedder& embedder,
                                                   const VectorStore& store, double tau_h);
std::vector<HallucinationFlag> hallucination_flags_serial(const kaos::KaosGraph& graph,
                                                          const providers::Embedder& embedder,
                                                          const VectorStore& store, double tau_h);

}  // namespace argneg::verify
