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

#include "argneg/gateway/exports.hpp"

#include <fstream>

#include "argneg/common/errors.hpp"

namespace argneg::gateway {

nlohmann::json extension_json(const af::Extension& e) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& id : e.members) out.push_back(id.str());
    return out;
}

nlohmann::json warnings_json(const Warnings& w) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : w) out.push_back({{"code", x.code}, {"message", x.message}});
    return out;
}

nlohmann::json graph_export(const attacks::AttackGraph& graph, const resolve::Resolution& resolution,
                            const resolve::Journal& journal, const nlohmann::json& config) {
    nlohmann::json preferred = nlohmann::json::array();
    for (const auto& e : resolution.preferred) preferred.push_back(extension_json(e));
    nlohmann::json status = nlohmann::json::object();
    for (const auto& [id, s] : resolution.status) status[id.str()] = resolve::to_string(s);
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [k, v] : resolution.config.weights) weights[k] = v;
    nlohmann::json cfg = config.is_object() ? config : nlohmann::json::object();
    cfg["semantics"] = af::to_string(resolution.config.semantics);
    cfg["preferred_strategy"] = resolve::to_string(resolution.config.strategy);
    cfg["weights"] = weights;
    return {{"arguments", graph.arguments},
            {"attacks", graph.attacks},
            {"grounded_extension", extension_json(resolution.grounded)},
            {"preferred_extensions", preferred},
            {"selected_extension", extension_json(resolution.extension)},
            {"status", status},
            {"priority_tie", resolution.priority_tie},
            {"notes", resolution.notes},
            {"config", cfg},
            {"journal", resolve::to_json(journal)}};
}

nlohmann::json kaos_export(const kaos::KaosBuild& build) {
    nlohmann::json j = build.graph;
    nlohmann::json repairs = nlohmann::json::array();
    for (const auto& r : build.repairs) {
        repairs.push_back({{"parent", r.parent},
                           {"child", r.child},
                           {"reattached_to", r.reattached_to ? nlohmann::json(*r.reattached_to) : nlohmann::json()}});
    }
    j["repairs"] = repairs;
    j["warnings"] = warnings_json(build.warnings);
    return j;
}

nlohmann::json trace_cards_export(const std::vector<resolve::TraceCard>& cards) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cards) out.push_back(resolve::to_json(c));
    return out;
}

namespace {

std::filesystem::path write(const std::filesystem::path& dir, const char* name, const std::string& content) {
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << content;
    return path;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<std::filesystem::path> write_artifacts(const PipelineResult& result, const PipelineConfig& config,
                                                   const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> paths;
    auto graph = graph_export(result.build.graph, result.resolution, {}, config.snapshot());
    graph["diagnostics"] = warnings_json(result.diagnostics);
    paths.push_back(write(dir, kGraphFile, dump(graph)));
    paths.push_back(write(dir, kKaosJsonFile, dump(kaos_export(result.kaos))));
    paths.push_back(write(dir, kKaosXmlFile, kaos::to_xml(result.kaos.graph)));
    const auto cards = resolve::trace_cards(result.resolution, result.build.graph);
    paths.push_back(write(dir, kTraceJsonFile, dump(trace_cards_export(cards))));
    paths.push_back(write(dir, kTraceMdFile, resolve::render_markdown(cards)));
    if (result.verification) paths.push_back(write(dir, kVerificationFile, dump(*result.verification)));
    nlohmann::json scc_sizes = nlohmann::json::array();
    for (const auto& c : result.stats.scc_partition) scc_sizes.push_back(c.size());
    nlohmann::json stats = result.run_stats;
    stats["scc_sizes"] = scc_sizes;
    paths.push_back(write(dir, kStatsFile, dump(stats)));
    if (!result.sweep.empty()) paths.push_back(write(dir, kSweepFile, dump(result.sweep)));
    return paths;
}

}  // namespace argneg::gateway
