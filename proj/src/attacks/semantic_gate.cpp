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

#include <exception>
#include <optional>
#include <set>

#include "argneg/attacks/builder.hpp"
#include "argneg/common/errors.hpp"

namespace argneg::attacks {

void GateConfig::validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0,1]");
    if (!(theta_floor >= 0.0 && theta_floor <= 1.0)) throw ConfigError("theta_floor must lie in [0,1]");
}

std::vector<CandidatePair> cross_session_pairs(std::span<const Argument> args,
                                               const std::map<std::string, std::vector<ArgumentId>>& survivors) {
    std::set<ArgumentId> keep;
    for (const auto& [session, ids] : survivors) keep.insert(ids.begin(), ids.end());
    std::vector<const Argument*> picked;
    for (const auto& a : args)
        if (keep.count(a.id)) picked.push_back(&a);
    std::vector<CandidatePair> out;
    for (std::size_t i = 0; i < picked.size(); ++i)
        for (std::size_t j = i + 1; j < picked.size(); ++j)
            if (picked[i]->source.session_id != picked[j]->source.session_id) out.push_back({picked[i], picked[j]});
    return out;
}

namespace {

struct Outcome {
    std::optional<providers::ConflictVerdict> verdict;
    std::string error;
};

Outcome evaluate(const CandidatePair& p, const providers::ConflictClassifier& classifier,
                 const providers::ClassifierContext& ctx) {
    Outcome o;
    try {
        o.verdict = classifier.classify(*p.first, *p.second, ctx);
    } catch (const std::exception& e) {
        o.error = e.what();
    } catch (...) {
        o.error = "unknown classifier failure";
    }
    return o;
}

void check_pairs(std::span<const CandidatePair> pairs) {
    for (const auto& p : pairs) {
        if (!p.first || !p.second) throw InputError("candidate pair with a missing argument");
        if (p.first->source.session_id == p.second->source.session_id)
            throw InputError("semantic pair " + p.first->id.str() + ", " + p.second->id.str() + " lies within session " +
                             p.first->source.session_id);
    }
}

SemanticResult assemble(std::span<const CandidatePair> pairs, const std::vector<Outcome>& outcomes, double theta_eff) {
    SemanticResult out;
    out.evaluated = pairs.size();
    std::set<std::pair<ArgumentId, ArgumentId>> seen;
    auto add = [&](const ArgumentId& a, const ArgumentId& b, const providers::ConflictVerdict& v) {
        if (seen.insert({a, b}).second) out.edges.push_back({a, b, Origin::semantic, v.confidence, v.rationale, std::nullopt});
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const auto& o = outcomes[i];
        if (!o.verdict) {
            out.diagnostics.push_back({"classifier_failure", p.first->id.str() + ", " + p.second->id.str() + ": " + o.error});
            continue;
        }
        const auto& v = *o.verdict;
        if (!v.is_conflict) continue;
        ++out.flagged;
        if (v.confidence < theta_eff) {
            out.diagnostics.push_back({"below_threshold", p.first->id.str() + ", " + p.second->id.str() +
                                                              " confidence " + std::to_string(v.confidence)});
            continue;
        }
        add(p.first->id, p.second->id, v);
        if (v.symmetric) add(p.second->id, p.first->id, v);
    }
    return out;
}

}  // namespace

SemanticResult semantic_conflict_edges(std::span<const CandidatePair> pairs,
                                       const providers::ConflictClassifier& classifier, const GateConfig& gate,
                                       const providers::ClassifierContext& ctx) {
    gate.validate();
    check_pairs(pairs);
    std::vector<Outcome> outcomes(pairs.size());
    const auto n = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = evaluate(pairs[static_cast<std::size_t>(i)], classifier, ctx);
    return assemble(pairs, outcomes, gate.effective());
}

SemanticResult semantic_conflict_edges_serial(std::span<const CandidatePair> pairs,
                                              const providers::ConflictClassifier& classifier, const GateConfig& gate,
                                              const providers::ClassifierContext& ctx) {
    gate.validate();
    check_pairs(pairs);
    std::vector<Outcome> outcomes;
    outcomes.reserve(pairs.size());
    for (const auto& p : pairs) outcomes.push_back(evaluate(p, classifier, ctx));
    return assemble(pairs, outcomes, gate.effective());
}

}  // namespace argneg::attacks
