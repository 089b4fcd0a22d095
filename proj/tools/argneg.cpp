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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <set>

#include "CLI11.hpp"
#include "argneg/common/errors.hpp"
#include "argneg/common/text.hpp"
#include "argneg/gateway/exports.hpp"
#include "argneg/gateway/service.hpp"

namespace {

namespace gw = argneg::gateway;
namespace providers = argneg::providers;

enum Exit { ok = 0, usage = 2, blocked = 3, runtime = 4 };

std::string join(const argneg::af::Extension& e) {
    std::string out;
    for (const auto& id : e.members) out += (out.empty() ? "" : ", ") + id.str();
    return "{" + out + "}";
}

// Codes seen more than three times collapse to a count.
void report(const argneg::Warnings& diagnostics) {
    std::map<std::string, std::size_t> count;
    for (const auto& d : diagnostics) ++count[d.code];
    std::set<std::string> summarized;
    for (const auto& d : diagnostics) {
        if (count[d.code] <= 3) {
            std::cerr << "diagnostic [" << d.code << "] " << d.message << "\n";
        } else if (summarized.insert(d.code).second) {
            std::cerr << "diagnostic [" << d.code << "] x" << count[d.code] << " (see " << argneg::gateway::kGraphFile << ")\n";
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Argumentation-based requirements negotiation pipeline"};
    argv = app.ensure_utf8(argv);

    gw::PipelineConfig cfg;
    std::string input, scenario, semantics = "grounded", strategy = "priority", weights = "uniform";
    std::string sweep, corpus, clauses, classifier_table, out_dir = "out", host = "127.0.0.1";
    bool serve = false, no_semantic = false;
    int port = 8080;

    app.add_option("--input", input, "Negotiation log (JSON)");
    app.add_option("--scenario", scenario, "Scripted-agent scenario (JSON)");
    app.add_option("--semantics", semantics, "grounded | preferred")->check(CLI::IsMember({"grounded", "preferred"}));
    app.add_option("--preferred-strategy", strategy, "intersection | priority");
    app.add_option("--weights", weights, "k=v,... | uniform | safety-critical");
    app.add_option("--theta", cfg.gate.theta, "Classifier confidence threshold");
    app.add_option("--theta-floor", cfg.gate.theta_floor, "Lower bound on the effective threshold");
    app.add_option("--theta-sweep", sweep, "Comma-separated thresholds swept with the floor at 0");
    app.add_flag("--arbitration", cfg.arbitration, "Run one cross-session arbitration round");
    app.add_flag("--no-semantic", no_semantic, "Skip classifier edges between sessions");
    app.add_option("--tau", cfg.tau, "Overlap and deduplication threshold");
    app.add_option("--tau-h", cfg.tau_h, "Hallucination flag threshold");
    app.add_option("--seed", cfg.seed, "Seed for stub providers");
    app.add_option("--out-dir", out_dir, "Artifact directory");
    app.add_option("--corpus", corpus, "Verification corpus (JSON)");
    app.add_option("--clauses", clauses, "Compliance clauses (JSON)");
    app.add_option("--domain", cfg.domain, "Clause applicability tag");
    app.add_option("--classifier-table", classifier_table, "Fixed classifier verdicts (JSON); env ARGNEG_CLASSIFIER_TABLE");
    app.add_flag("--serve", serve, "Serve the what-if HTTP API after the run");
    app.add_option("--host", host, "Bind address for --serve");
    app.add_option("--port", port, "Port for --serve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    std::unique_ptr<providers::ConflictClassifier> classifier;
    try {
        if (!input.empty()) cfg.input = input;
        if (!scenario.empty()) cfg.scenario = scenario;
        if (!corpus.empty()) cfg.corpus = corpus;
        if (!clauses.empty()) cfg.clauses = clauses;
        cfg.semantic = !no_semantic;
        cfg.resolution.semantics = argneg::af::parse_semantics(semantics);
        cfg.resolution.strategy = argneg::resolve::parse_preferred_strategy(strategy);
        cfg.resolution.weights = argneg::resolve::parse_weights(weights);
        for (const auto& item : argneg::text::split_list(sweep)) {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw argneg::ConfigError("bad theta sweep value '" + item + "'");
            cfg.theta_sweep.push_back(v);
        }
        if (classifier_table.empty()) {
            if (const char* env = std::getenv("ARGNEG_CLASSIFIER_TABLE")) classifier_table = env;
        }
        if (!classifier_table.empty()) {
            classifier = std::make_unique<providers::TableClassifier>(providers::TableClassifier::load(classifier_table));
        } else {
            classifier = std::make_unique<providers::SeededConfidenceClassifier>(cfg.seed, 0.50, 0.84);
        }
        cfg.validate();
    } catch (const std::invalid_argument&) {
        std::cerr << "error: theta sweep values must be numbers\n";
        return usage;
    } catch (const argneg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }

    providers::TokenCosineSimilarity similarity;
    providers::HashedBagOfWordsEmbedder embedder;
    providers::TokenCoverageEntailment entailment;
    const gw::Providers prov{*classifier, similarity, embedder, entailment};

    gw::PipelineResult result;
    try {
        result = gw::run_pipeline(cfg, prov);
        report(result.diagnostics);
        const auto paths = gw::write_artifacts(result, cfg, out_dir);
        std::cout << "arguments: " << result.build.graph.arguments.size()
                  << "  attacks: " << result.build.graph.attacks.size() << "\n";
        std::cout << "grounded extension: " << join(result.resolution.grounded) << "\n";
        std::cout << "selected extension: " << join(result.resolution.extension) << "\n";
        for (const auto& p : paths) std::cout << "wrote " << p.string() << "\n";
    } catch (const argneg::ProviderError& e) {
        std::cerr << "provider error: " << e.what() << "\n";
        return runtime;
    } catch (const argneg::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const argneg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const argneg::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return runtime;
    }

    if (result.verification && result.verification->blocked_at) {
        std::cerr << "verification blocked at " << argneg::verify::to_string(*result.verification->blocked_at) << "\n";
        return blocked;
    }
    if (!serve) return ok;

    gw::SnapshotStore store;
    store.add(std::nullopt, "initial", result.build.graph, result.resolution, {}, cfg.snapshot());
    gw::Service service(store, {result.log.metadata.project, cfg.tau, &similarity});
    try {
        std::cout << "serving on http://" << host << ":" << port << std::endl;
        service.serve(host, port);
    } catch (const std::exception& e) {
        std::cerr << "serve failed: " << e.what() << "\n";
        return runtime;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
