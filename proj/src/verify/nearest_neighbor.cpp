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

#include "argneg/verify/nearest_neighbor.hpp"

#include <exception>
#include <fstream>

#include "argneg/common/errors.hpp"

namespace argneg::verify {

std::vector<Passage> corpus_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("corpus: expected an array of passages");
    std::vector<Passage> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_object() || !e.contains("text") || !e["text"].is_string())
            throw InputError("corpus[" + std::to_string(i) + "]: missing text");
        Passage p;
        p.id = e.value("id", "p" + std::to_string(i + 1));
        p.standard = e.value("standard", "");
        p.clause = e.value("clause", "");
        p.text = e["text"].get<std::string>();
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Passage> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus '" + path + "'");
    try {
        return corpus_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad corpus '" + path + "': " + e.what());
    }
}

BruteForceStore::BruteForceStore(std::vector<Passage> passages, const providers::Embedder& embedder)
    : passages_(std::move(passages)) {
    vectors_.reserve(passages_.size());
    for (const auto& p : passages_) vectors_.push_back(embedder.embed(p.text));
}

std::optional<NearestMatch> BruteForceStore::nearest(std::span<const double> query) const {
    std::optional<NearestMatch> best;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        const double s = providers::cosine(query, vectors_[i]);
        if (!best || s > best->similarity) best = NearestMatch{i, s};
    }
    return best;
}

void to_json(nlohmann::json& j, const HallucinationFlag& f) {
    j = {{"goal_id", f.goal_id}, {"passage_id", f.passage_id}, {"nearest_passage", f.nearest_passage},
         {"similarity", f.similarity}};
}

namespace {

std::optional<HallucinationFlag> check_goal(const kaos::GoalNode& goal, const providers::Embedder& embedder,
                                            const VectorStore& store, double tau_h) {
    const auto q = embedder.embed(goal.description);
    const auto m = store.nearest(q);
    const double sim = m ? m->similarity : 0.0;
    if (!(sim < tau_h)) return std::nullopt;
    HallucinationFlag f{goal.goal_id, "", "", sim};
    if (m) {
        f.passage_id = store.passage(m->passage).id;
        f.nearest_passage = store.passage(m->passage).text;
    }
    return f;
}

std::vector<HallucinationFlag> collect(std::vector<std::optional<HallucinationFlag>>& slots) {
    std::vector<HallucinationFlag> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace

std::vector<HallucinationFlag> hallucination_flags(const kaos::KaosGraph& graph, const providers::Embedder& embedder,
                                                   const VectorStore& store, double tau_h) {
    const auto& goals = graph.goals;
    std::vector<std::optional<HallucinationFlag>> slots(goals.size());
    std::exception_ptr failure;
    const auto n = static_cast<long long>(goals.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            slots[static_cast<std::size_t>(i)] = check_goal(goals[static_cast<std::size_t>(i)], embedder, store, tau_h);
        } catch (...) {
#pragma omp critical(argneg_verify_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return collect(slots);
}

std::vector<HallucinationFlag> hallucination_flags_serial(const kaos::KaosGraph& graph,
                                                          const providers::Embedder& embedder,
                                                          const VectorStore& store, double tau_h) {
    std::vector<std::optional<HallucinationFlag>> slots;
    for (const auto& goal : graph.goals) slots.push_back(check_goal(goal, embedder, store, tau_h));
    return collect(slots);
}

}  // namespace argneg::verify
