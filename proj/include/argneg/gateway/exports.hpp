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

#include <filesystem>
#include <string>
#include <vector>

#include "argneg/gateway/pipeline.hpp"
#include "argneg/resolve/trace.hpp"

namespace argneg::gateway {

// Sanitized artifact names.
inline constexpr const char* kGraphFile = "argumentation_graph.json";
inline constexpr const char* kKaosJsonFile = "kaos_model.json";
inline constexpr const char* kKaosXmlFile = "kaos_model.xml";
inline constexpr const char* kTraceJsonFile = "trace_cards.json";
inline constexpr const char* kTraceMdFile = "trace_cards.md";
inline constexpr const char* kVerificationFile = "verification_report.json";
inline constexpr const char* kStatsFile = "run_stats.json";
inline constexpr const char* kSweepFile = "theta_sweep.json";

nlohmann::json extension_json(const af::Extension& e);

// arguments[], attacks[], grounded_extension[], preferred_extensions[][],
// selected_extension, status, config, journal[].
nlohmann::json graph_export(const attacks::AttackGraph& graph, const resolve::Resolution& resolution,
                            const resolve::Journal& journal, const nlohmann::json& config);

nlohmann::json kaos_export(const kaos::KaosBuild& build);
nlohmann::json trace_cards_export(const std::vector<resolve::TraceCard>& cards);
nlohmann::json warnings_json(const Warnings& w);

// Writes every artifact into `dir` (created when missing); returns the written paths.
std::vector<std::filesystem::path> write_artifacts(const PipelineResult& result, const PipelineConfig& config,
                                                   const std::filesystem::path& dir);

}  // namespace argneg::gateway
