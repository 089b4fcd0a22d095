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

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "argneg/gateway/pipeline.hpp"

namespace argneg::gateway {

struct Snapshot {
    std::string id;
    std::optional<std::string> parent;
    std::string operation;  // initial | remove_attack | inject_argument | solve
    attacks::AttackGraph graph;
    resolve::Resolution resolution;
    resolve::Journal journal;
    nlohmann::json config;
    std::string body;  // serialized graph export, fixed at creation
};

// Append-only; snapshots are shared read-only once stored.
class SnapshotStore {
public:
    std::shared_ptr<const Snapshot> add(std::optional<std::string> parent, std::string operation,
                                        attacks::AttackGraph graph, resolve::Resolution resolution,
                                        resolve::Journal journal, const nlohmann::json& config);
    std::shared_ptr<const Snapshot> get(const std::string& id) const;
    std::vector<std::shared_ptr<const Snapshot>> list() const;

private:
    mutable std::mutex mutex_;
    std::vector<std::shared_ptr<const Snapshot>> snapshots_;
};

struct Response {
    int status = 200;
    std::string body;  // JSON
};

struct ServiceContext {
    std::string project;
    double dedup_tau = 0.85;
    const providers::SimilarityProvider* similarity = nullptr;  // KAOS dedup; token cosine when null
};

// Routes:
//   GET  /snapshots
//   GET  /snapshots/{id}
//   POST /snapshots/{id}/remove-edge   {"attacker","target"}
//   POST /snapshots/{id}/inject        {"argument": {...}, "attacks": [...]}
//   POST /snapshots/{id}/solve         {"semantics","preferred_strategy","weights"}
//   GET  /snapshots/{id}/trace-cards[/{argument}]
//   GET  /snapshots/{id}/metrics
//   GET  /snapshots/{id}/kaos
// Errors: {"error": {"code", "message"}} with a 4xx status.
class Service {
public:
    Service(SnapshotStore& store, ServiceContext context);

    Response handle(const std::string& method, const std::string& path, const std::string& body) const;

    // Blocks until stop() is called from another thread.
    void serve(const std::string& host, int port);
    void stop();
    // Port bound by serve(); 0 until the listener accepts connections.
    int bound_port() const;

private:
    struct Server;
    SnapshotStore& store_;
    ServiceContext context_;
    std::shared_ptr<Server> server_;
};

}  // namespace argneg::gateway
