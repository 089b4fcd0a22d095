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

#include "argneg/verify/verifier.hpp"

#include <exception>
#include <fstream>

#include "argneg/common/errors.hpp"
#include "argneg/common/text.hpp"

namespace argneg::verify {

std::vector<Clause> clauses_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("clauses: expected an array");
    std::vector<Clause> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_object() || !e.contains("clause_id") || !e.contains("text"))
            throw InputError("clauses[" + std::to_string(i) + "]: clause_id and text are required");
        out.push_back({e["clause_id"].get<std::string>(), e["text"].get<std::string>(), e.value("applicability", "")});
    }
    return out;
}

std::vector<Clause> load_clauses(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open clause file '" + path + "'");
    try {
        return clauses_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad clause file '" + path + "': " + e.what());
    }
}

std::string_view to_string(Layer l) noexcept {
    switch (l) {
        case Layer::layer1: return "Layer1";
        case Layer::layer2: return "Layer2";
        case Layer::layer3: return "Layer3";
    }
    return "Layer1";
}

std::string content_digest(const kaos::KaosGraph& graph) {
    std::string buf;
    for (const auto& g : graph.goals) {
        for (std::string_view f : {std::string_view(g.goal_id), std::string_view(g.description),
                                   std::string_view(g.quality_dimension),
                                   g.level ? kaos::to_string(*g.level) : std::string_view(),
                                   std::string_view(g.rationale)}) {
            buf += f;
            buf += '\x1f';
        }
        buf += '\x1e';
    }
    return text::hex64(text::fnv1a(buf));
}

bool clause_applies(const Clause& c, const std::string& domain) {
    return domain.empty() || c.applicability.empty() || c.applicability == "*" || c.applicability == domain;
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& c : r.compliance.clauses) {
        clauses.push_back({{"clause_id", c.clause_id},
                           {"satisfied", c.satisfied},
                           {"satisfied_by", c.satisfied_by ? nlohmann::json(c.satisfied_by->str()) : nlohmann::json()},
                           {"rationale", c.rationale}});
    }
    j = {{"violations", r.violations},
         {"hallucination_flags", r.hallucination_flags},
         {"compliance",
          {{"applicable_clauses", r.compliance.applicable_clauses},
           {"satisfied", r.compliance.satisfied},
           {"gamma", r.compliance.gamma ? nlohmann::json(*r.compliance.gamma) : nlohmann::json()},
           {"clauses", clauses},
           {"note", r.compliance.note ? nlohmann::json(*r.compliance.note) : nlohmann::json()}}},
         {"blocked_at", r.blocked_at ? nlohmann::json(to_string(*r.blocked_at)) : nlohmann::json()},
         {"content_digest_before", r.content_digest_before},
         {"content_digest_after", r.content_digest_after}};
}

namespace {

Compliance layer3(const std::vector<resolve::AcceptedRequirement>& r_acc, const std::vector<Clause>& clauses,
                  const providers::EntailmentProvider& entailment, const std::string& domain) {
    Compliance c;
    std::vector<const Clause*> applicable;
    for (const auto& cl : clauses)
        if (clause_applies(cl, domain)) applicable.push_back(&cl);
    c.applicable_clauses = applicable.size();
    if (applicable.empty()) {
        c.note = "no applicable clauses; gamma undefined";
        return c;
    }
    std::vector<std::string> texts;
    for (const auto& r : r_acc) texts.push_back(r.content);
    std::vector<providers::EntailmentVerdict> verdicts(applicable.size());
    std::exception_ptr failure;
    const auto n = static_cast<long long>(applicable.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            verdicts[static_cast<std::size_t>(i)] = entailment.entails(applicable[static_cast<std::size_t>(i)]->text, texts);
        } catch (...) {
#pragma omp critical(argneg_verify_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::exception& e) {
            throw ProviderError(std::string("entailment provider failed: ") + e.what());
        }
    }
    for (std::size_t i = 0; i < applicable.size(); ++i) {
        const auto& v = verdicts[i];
        ClauseResult res{applicable[i]->clause_id, v.satisfied, std::nullopt, v.rationale};
        if (v.satisfied) {
            ++c.satisfied;
            if (v.satisfying_index && *v.satisfying_index < r_acc.size()) res.satisfied_by = r_acc[*v.satisfying_index].argument;
        }
        c.clauses.push_back(std::move(res));
    }
    c.gamma = static_cast<double>(c.satisfied) / static_cast<double>(c.applicable_clauses);
    return c;
}

}  // namespace

VerificationReport verify(const kaos::KaosGraph& graph, const attacks::AttackGraph& af_graph,
                          const std::vector<resolve::AcceptedRequirement>& r_acc, const std::vector<Passage>& corpus,
                          const std::vector<Clause>& clauses, const VerifyProviders& providers,
                          const VerifyConfig& config) {
    if (corpus.empty() && !providers.store) throw ConfigError("verification corpus is empty");
    if (!(config.tau_h >= 0.0 && config.tau_h <= 1.0)) throw ConfigError("tau_h must lie in [0,1]");
    VerificationReport report;
    report.content_digest_before = content_digest(graph);
    report.violations = layer1_structural_check(graph, af_graph);
    if (has_error(report.violations)) {
        report.blocked_at = Layer::layer2;
        report.compliance.note = "blocked by Layer 1 errors";
    } else {
        std::optional<BruteForceStore> owned;
        const VectorStore* store = providers.store;
        if (!store) store = &owned.emplace(corpus, providers.embedder);
        report.hallucination_flags = hallucination_flags(graph, providers.embedder, *store, config.tau_h);
        report.compliance = layer3(r_acc, clauses, providers.entailment, config.domain);
    }
    report.content_digest_after = content_digest(graph);
    return report;
}

}  // namespace argneg::verify
