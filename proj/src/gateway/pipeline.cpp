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

#include "argneg/gateway/pipeline.hpp"

#include <filesystem>
#include <set>

#include "argneg/common/errors.hpp"
#include "argneg/protocol/scripted_agent.hpp"

namespace argneg::gateway {

namespace {

void check_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(std::string(name) + " must lie in [0,1]");
}

void check_file(const std::optional<std::string>& path, const char* what) {
    if (path && !std::filesystem::is_regular_file(*path))
        throw ConfigError(std::string(what) + " '" + *path + "' does not exist");
}

}  // namespace

void PipelineConfig::validate() const {
    if (input.has_value() == scenario.has_value()) throw ConfigError("exactly one of --input or --scenario is required");
    check_file(input, "input");
    check_file(scenario, "scenario");
    check_file(corpus, "corpus");
    check_file(clauses, "clause file");
    if (clauses && !corpus) throw ConfigError("a clause file needs a corpus");
    gate.validate();
    check_unit(tau, "tau");
    check_unit(tau_h, "tau_h");
    for (double t : theta_sweep) check_unit(t, "theta sweep value");
    resolution.validate();
}

nlohmann::json PipelineConfig::snapshot() const {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, v] : resolution.weights) w[k] = v;
    return {{"semantics", af::to_string(resolution.semantics)},
            {"preferred_strategy", resolve::to_string(resolution.strategy)},
            {"weights", w},
            {"theta", gate.theta},
            {"theta_floor", gate.theta_floor},
            {"theta_eff", gate.effective()},
            {"semantic", semantic},
            {"arbitration", arbitration},
            {"tau", tau},
            {"tau_h", tau_h},
            {"seed", seed}};
}

GraphBuild build_graph(const dialogue::NegotiationLog& log, const PipelineConfig& config, const Providers& providers) {
    GraphBuild out;
    auto& g = out.graph;
    g.arguments = dialogue::extract_arguments(log, &out.diagnostics);
    auto rules = attacks::rule_based_attacks(g.arguments, log);
    g.attacks = rules.edges;
    out.diagnostics.insert(out.diagnostics.end(), rules.warnings.begin(), rules.warnings.end());
    const std::vector<attacks::AttackEdge> rule_edges = g.attacks;

    std::set<std::pair<af::ArgumentId, af::ArgumentId>> taken;
    for (const auto& e : g.attacks) taken.insert({e.attacker, e.target});
    auto add = [&](const attacks::AttackEdge& e) {
        if (taken.insert({e.attacker, e.target}).second) g.attacks.push_back(e);
    };

    auto recorded = attacks::recorded_attacks(g.arguments, log, config.gate);
    for (const auto& e : recorded.edges) add(e);
    out.diagnostics.insert(out.diagnostics.end(), recorded.warnings.begin(), recorded.warnings.end());

    const auto survivors = attacks::survivors_by_session(g.arguments, rule_edges, &out.diagnostics);
    if (config.semantic) {
        const auto pairs = attacks::cross_session_pairs(g.arguments, survivors);
        out.candidate_pairs = pairs.size();
        providers::ClassifierContext ctx{log.metadata.project, config.seed};
        auto sem = attacks::semantic_conflict_edges(pairs, providers.classifier, config.gate, ctx);
        for (const auto& e : sem.edges) add(e);
        out.diagnostics.insert(out.diagnostics.end(), sem.diagnostics.begin(), sem.diagnostics.end());
    }
    if (config.arbitration) {
        std::map<std::string, std::vector<dialogue::Argument>> accepted;
        for (const auto& [session, ids] : survivors)
            for (const auto& id : ids) accepted[session].push_back(g.at(id));
        auto arb = attacks::cross_pair_arbitration(accepted, providers.similarity, config.tau, g.arguments);
        g.arguments.insert(g.arguments.end(), arb.critiques.begin(), arb.critiques.end());
        for (const auto& e : arb.edges) add(e);
        out.overlaps = std::move(arb.overlaps);
    }
    g.validate();
    return out;
}

void to_json(nlohmann::json& j, const SweepRow& r) {
    j = {{"theta", r.theta},
         {"theta_eff", r.theta_eff},
         {"semantic_edges", r.semantic_edges},
         {"gci", r.gci ? nlohmann::json(*r.gci) : nlohmann::json()},
         {"grounded_size", r.grounded_size},
         {"preferred_size", r.preferred_size ? nlohmann::json(*r.preferred_size) : nlohmann::json()}};
}

std::vector<SweepRow> theta_sweep(const dialogue::NegotiationLog& log, const PipelineConfig& config,
                                  const Providers& providers, const std::vector<double>& thetas) {
    std::vector<SweepRow> rows;
    for (double theta : thetas) {
        PipelineConfig c = config;
        c.gate = {theta, 0.0};
        c.gate.validate();
        const auto build = build_graph(log, c, providers);
        resolve::ResolutionConfig rc = config.resolution;
        rc.semantics = af::Semantics::preferred;
        const auto res = resolve::resolve(build.graph, rc);
        SweepRow row;
        row.theta = theta;
        row.theta_eff = c.gate.effective();
        row.semantic_edges = build.graph.origin_counts()["semantic"];
        row.gci = af::graph_cyclicity_index(build.graph.framework());
        row.grounded_size = res.grounded.size();
        if (!res.preferred.empty()) row.preferred_size = res.extension.size();
        rows.push_back(row);
    }
    return rows;
}

dialogue::NegotiationLog load_negotiation(const PipelineConfig& config, const providers::SimilarityProvider& similarity,
                                          Warnings* diagnostics) {
    if (config.input) return dialogue::load_log(*config.input);
    const auto scenario = protocol::load_scenario(*config.scenario);
    return protocol::run_scenario(scenario, similarity, diagnostics);
}

PipelineResult run_pipeline(const PipelineConfig& config, const Providers& providers) {
    config.validate();
    PipelineResult r;
    r.log = load_negotiation(config, providers.similarity, &r.diagnostics);
    r.build = build_graph(r.log, config, providers);
    r.diagnostics.insert(r.diagnostics.end(), r.build.diagnostics.begin(), r.build.diagnostics.end());
    r.resolution = resolve::resolve(r.build.graph, config.resolution);
    r.stats = af::graph_stats(r.build.graph.framework(), nullptr);

    kaos::IntegrationConfig kc;
    kc.project = r.log.metadata.project;
    kc.dedup_tau = config.tau;
    kc.weights = config.resolution.weights;
    r.kaos = kaos::integrate(r.resolution.accepted, r.build.graph, providers.similarity, kc);
    r.diagnostics.insert(r.diagnostics.end(), r.kaos.warnings.begin(), r.kaos.warnings.end());

    if (config.corpus) {
        const auto corpus = verify::load_corpus(*config.corpus);
        const auto clauses = config.clauses ? verify::load_clauses(*config.clauses) : std::vector<verify::Clause>{};
        verify::VerifyConfig vc{config.tau_h, config.domain};
        r.verification = verify::verify(r.kaos.graph, r.build.graph, r.resolution.accepted, corpus, clauses,
                                        {providers.embedder, providers.entailment, nullptr}, vc);
    }
    r.run_stats = metrics::run_stats(r.resolution, r.build.graph, r.stats, &r.kaos.graph);
    if (!config.theta_sweep.empty()) r.sweep = theta_sweep(r.log, config, providers, config.theta_sweep);
    return r;
}

}  // namespace argneg::gateway
