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

#include "argneg/gateway/service.hpp"

#include <atomic>

#include "argneg/common/errors.hpp"
#include "argneg/gateway/exports.hpp"
#include "argneg/resolve/trace.hpp"
#include "httplib.h"

namespace argneg::gateway {

std::shared_ptr<const Snapshot> SnapshotStore::add(std::optional<std::string> parent, std::string operation,
                                                   attacks::AttackGraph graph, resolve::Resolution resolution,
                                                   resolve::Journal journal, const nlohmann::json& config) {
    auto s = std::make_shared<Snapshot>();
    s->parent = std::move(parent);
    s->operation = std::move(operation);
    s->body = graph_export(graph, resolution, journal, config).dump();
    s->graph = std::move(graph);
    s->resolution = std::move(resolution);
    s->journal = std::move(journal);
    s->config = config;
    std::lock_guard lock(mutex_);
    s->id = "s" + std::to_string(snapshots_.size());
    snapshots_.push_back(s);
    return s;
}

std::shared_ptr<const Snapshot> SnapshotStore::get(const std::string& id) const {
    std::lock_guard lock(mutex_);
    for (const auto& s : snapshots_)
        if (s->id == id) return s;
    return nullptr;
}

std::vector<std::shared_ptr<const Snapshot>> SnapshotStore::list() const {
    std::lock_guard lock(mutex_);
    return snapshots_;
}

namespace {

struct ClientError {
    int status;
    std::string code;
    std::string message;
};

Response json_response(const nlohmann::json& j, int status = 200) { return {status, j.dump()}; }

Response error_response(const ClientError& e) {
    return json_response({{"error", {{"code", e.code}, {"message", e.message}}}}, e.status);
}

nlohmann::json parse_body(const std::string& body) {
    if (body.empty()) return nlohmann::json::object();
    try {
        auto j = nlohmann::json::parse(body);
        if (!j.is_object()) throw ClientError{400, "bad_request", "request body must be a JSON object"};
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ClientError{400, "bad_request", e.what()};
    }
}

std::string required_string(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw ClientError{400, "bad_request", std::string("missing string field '") + key + "'"};
    return it->get<std::string>();
}

nlohmann::json ids_json(const af::ArgumentIds& ids) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& id : ids) out.push_back(id.str());
    return out;
}

nlohmann::json mutation_json(const Snapshot& s, const resolve::ExtensionDelta& d) {
    return {{"snapshot", s.id},
            {"parent", s.parent ? nlohmann::json(*s.parent) : nlohmann::json()},
            {"operation", s.operation},
            {"delta", {{"entered", ids_json(d.entered)}, {"left", ids_json(d.left)}}},
            {"grounded_extension", extension_json(s.resolution.grounded)},
            {"selected_extension", extension_json(s.resolution.extension)}};
}

std::vector<std::string> segments(const std::string& path) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < path.size()) {
        const auto j = path.find('/', i);
        const auto seg = path.substr(i, j == std::string::npos ? std::string::npos : j - i);
        if (!seg.empty()) out.push_back(seg);
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return out;
}

}  // namespace

struct Service::Server {
    httplib::Server http;
    std::atomic<int> port{0};
};

Service::Service(SnapshotStore& store, ServiceContext context)
    : store_(store), context_(std::move(context)), server_(std::make_shared<Server>()) {}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) const {
    const auto seg = segments(path.substr(0, path.find('?')));
    try {
        if (seg.empty() || seg[0] != "snapshots") throw ClientError{404, "not_found", "no route for " + path};
        const bool get = method == "GET", post = method == "POST";
        auto wrong_method = [&] { return ClientError{405, "method_not_allowed", method + " " + path}; };

        if (seg.size() == 1) {
            if (!get) throw wrong_method();
            nlohmann::json out = nlohmann::json::array();
            for (const auto& s : store_.list()) {
                out.push_back({{"id", s->id},
                               {"parent", s->parent ? nlohmann::json(*s->parent) : nlohmann::json()},
                               {"operation", s->operation},
                               {"selected_extension", extension_json(s->resolution.extension)}});
            }
            return json_response(out);
        }

        const auto snap = store_.get(seg[1]);
        if (!snap) throw ClientError{404, "unknown_snapshot", "no snapshot '" + seg[1] + "'"};
        const auto& graph = snap->graph;
        const auto& config = snap->resolution.config;

        if (seg.size() == 2) {
            if (!get) throw wrong_method();
            return {200, snap->body};
        }
        const std::string& op = seg[2];

        if (op == "remove-edge" && seg.size() == 3) {
            if (!post) throw wrong_method();
            const auto req = parse_body(body);
            const af::Attack edge{af::ArgumentId{required_string(req, "attacker")},
                                  af::ArgumentId{required_string(req, "target")}};
            if (!graph.edge(edge.attacker, edge.target))
                throw ClientError{404, "unknown_edge", "no attack " + edge.attacker.str() + " -> " + edge.target.str()};
            auto journal = snap->journal;
            auto w = resolve::what_if_remove_attack(graph, edge, config, &journal);
            auto next = store_.add(snap->id, "remove_attack", std::move(w.graph), std::move(w.resolution),
                                   std::move(journal), snap->config);
            return json_response(mutation_json(*next, w.delta), 201);
        }

        if (op == "inject" && seg.size() == 3) {
            if (!post) throw wrong_method();
            const auto req = parse_body(body);
            dialogue::Argument arg;
            std::vector<attacks::AttackEdge> edges;
            try {
                arg = req.at("argument").get<dialogue::Argument>();
                if (req.contains("attacks")) edges = req.at("attacks").get<std::vector<attacks::AttackEdge>>();
            } catch (const nlohmann::json::exception& e) {
                throw ClientError{400, "bad_request", e.what()};
            } catch (const InputError& e) {
                throw ClientError{400, "bad_request", e.what()};
            }
            if (graph.find(arg.id)) throw ClientError{409, "duplicate_argument", "argument " + arg.id.str() + " exists"};
            for (const auto& e : edges) {
                for (const auto* id : {&e.attacker, &e.target})
                    if (*id != arg.id && !graph.find(*id))
                        throw ClientError{404, "unknown_argument", "no argument " + id->str()};
            }
            auto journal = snap->journal;
            resolve::WhatIf w;
            try {
                w = resolve::what_if_inject(graph, std::move(arg), std::move(edges), config, &journal);
            } catch (const InputError& e) {
                throw ClientError{422, "invalid_injection", e.what()};
            }
            auto next = store_.add(snap->id, "inject_argument", std::move(w.graph), std::move(w.resolution),
                                   std::move(journal), snap->config);
            return json_response(mutation_json(*next, w.delta), 201);
        }

        if (op == "solve" && seg.size() == 3) {
            if (!post) throw wrong_method();
            const auto req = parse_body(body);
            resolve::ResolutionConfig rc = config;
            try {
                if (req.contains("semantics")) rc.semantics = af::parse_semantics(req.at("semantics").get<std::string>());
                if (req.contains("preferred_strategy"))
                    rc.strategy = resolve::parse_preferred_strategy(req.at("preferred_strategy").get<std::string>());
                if (req.contains("weights")) {
                    const auto& w = req.at("weights");
                    if (w.is_string()) {
                        rc.weights = resolve::parse_weights(w.get<std::string>());
                    } else {
                        rc.weights.clear();
                        for (const auto& [k, v] : w.items()) rc.weights[resolve::axis_key(k)] = v.get<double>();
                    }
                }
                rc.validate();
            } catch (const nlohmann::json::exception& e) {
                throw ClientError{400, "bad_request", e.what()};
            } catch (const Error& e) {
                throw ClientError{400, "invalid_config", e.what()};
            }
            auto res = resolve::resolve(graph, rc);
            auto journal = snap->journal;
            journal.append("solve", req);
            const auto delta = resolve::extension_delta(snap->resolution.extension, res.extension);
            auto next = store_.add(snap->id, "solve", graph, std::move(res), std::move(journal), snap->config);
            return json_response(mutation_json(*next, delta), 201);
        }

        if (op == "trace-cards" && (seg.size() == 3 || seg.size() == 4)) {
            if (!get) throw wrong_method();
            if (seg.size() == 3)
                return json_response(trace_cards_export(resolve::trace_cards(snap->resolution, graph)));
            const af::ArgumentId id{seg[3]};
            if (!graph.find(id)) throw ClientError{404, "unknown_argument", "no argument " + seg[3]};
            try {
                return json_response(resolve::to_json(resolve::trace_card(id, snap->resolution, graph)));
            } catch (const DomainError& e) {
                throw ClientError{409, "not_accepted", e.what()};
            }
        }

        if ((op == "metrics" || op == "kaos") && seg.size() == 3) {
            if (!get) throw wrong_method();
            providers::TokenCosineSimilarity fallback;
            kaos::IntegrationConfig kc{context_.project, context_.dedup_tau, config.weights};
            const auto k = kaos::integrate(snap->resolution.accepted, graph,
                                           context_.similarity ? *context_.similarity : fallback, kc);
            if (op == "kaos") {
                auto j = kaos_export(k);
                j["xml"] = kaos::to_xml(k.graph);
                return json_response(j);
            }
            const auto stats = af::graph_stats(graph.framework(), nullptr);
            return json_response(metrics::run_stats(snap->resolution, graph, stats, &k.graph));
        }

        throw ClientError{404, "not_found", "no route for " + path};
    } catch (const ClientError& e) {
        return error_response(e);
    } catch (const std::exception& e) {
        return error_response({500, "internal_error", e.what()});
    }
}

void Service::serve(const std::string& host, int port) {
    auto& http = server_->http;
    auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
        const auto r = handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    http.Get(".*", bridge);
    http.Post(".*", bridge);
    int bound = port;
    if (port == 0) {
        bound = http.bind_to_any_port(host);
    } else if (!http.bind_to_port(host, port)) {
        bound = -1;
    }
    if (bound < 0) throw ProviderError("cannot bind " + host + ":" + std::to_string(port));
    server_->port = bound;
    http.listen_after_bind();
    server_->port = 0;
}

void Service::stop() { server_->http.stop(); }

int Service::bound_port() const { return server_->http.is_running() ? server_->port.load() : 0; }

}  // namespace argneg::gateway
