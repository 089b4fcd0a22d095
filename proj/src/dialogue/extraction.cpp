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

#include "argneg/common/errors.hpp"
#include "argneg/dialogue/argument.hpp"

namespace argneg::dialogue {

using nlohmann::json;

std::map<TurnRef, af::ArgumentId> turn_argument_ids(const NegotiationLog& log) {
    std::map<TurnRef, af::ArgumentId> ids;
    std::size_t next = 1;
    for (const auto& s : log.sessions) {
        for (const auto& t : s.turns) {
            ids.emplace(t.ref(), af::ArgumentId{"a" + std::to_string(next++)});
        }
    }
    return ids;
}

std::vector<Argument> extract_arguments(const NegotiationLog& log, Warnings* warnings) {
    const auto ids = turn_argument_ids(log);
    auto lookup = [&](const TurnRef& r) { return ids.at(r); };

    std::vector<Argument> args;
    args.reserve(ids.size());
    for (const auto& s : log.sessions) {
        for (const auto& t : s.turns) {
            Argument a;
            a.id = lookup(t.ref());
            a.act = t.act;
            a.content = t.content;
            a.agent = t.agent;
            a.quality = t.quality_dimension;
            a.rationale = t.rationale;
            a.source = {s.id, t.round, t.turn_index};
            for (const auto& r : t.targets) a.targets.push_back(lookup(r));
            if (t.supersedes) a.supersedes = lookup(*t.supersedes);
            for (const auto& r : t.resolves) a.resolves.push_back(lookup(r));
            if (t.endorses) a.endorses = lookup(*t.endorses);
            a.status = t.status;
            a.subgoals = t.subgoals;
            if (a.rationale.empty() && warnings) {
                warnings->push_back({"empty_rationale", "argument " + a.id.str() + " has an empty rationale"});
            }
            args.push_back(std::move(a));
        }
    }
    return args;
}

void to_json(json& j, const Argument& a) {
    j = json{{"id", a.id},
             {"type", to_string(a.act)},
             {"content", a.content},
             {"agent", a.agent},
             {"quality", a.quality},
             {"rationale", a.rationale},
             {"source", {{"session", a.source.session_id}, {"round", a.source.round}, {"turn_index", a.source.turn_index}}}};
    json links = json::object();
    if (!a.targets.empty()) links["targets"] = a.targets;
    if (a.supersedes) links["supersedes"] = *a.supersedes;
    if (!a.resolves.empty()) links["resolves"] = a.resolves;
    if (a.endorses) links["endorses"] = *a.endorses;
    j["links"] = std::move(links);
    if (a.status) j["status"] = to_string(*a.status);
    if (!a.subgoals.empty()) {
        json sg = json::array();
        for (const auto& g : a.subgoals) {
            sg.push_back({{"description", g.description}, {"quality_dimension", g.quality_dimension}, {"concerns", g.concerns}});
        }
        j["subgoals"] = std::move(sg);
    }
}

void from_json(const json& j, Argument& a) {
    auto req = [&](const char* key) -> const json& {
        auto it = j.find(key);
        if (it == j.end() || !it->is_string()) throw InputError(std::string("argument field '") + key + "' missing or not a string");
        return *it;
    };
    a = Argument{};
    a.id = af::ArgumentId{req("id").get<std::string>()};
    a.act = parse_act(req("type").get<std::string>());
    a.content = req("content").get<std::string>();
    a.agent = req("agent").get<std::string>();
    a.quality = req("quality").get<std::string>();
    a.rationale = j.value("rationale", std::string{});
    if (auto src = j.find("source"); src != j.end() && src->is_object()) {
        a.source.session_id = src->value("session", std::string{});
        a.source.round = src->value("round", 0);
        a.source.turn_index = src->value("turn_index", 0);
    }
    if (auto links = j.find("links"); links != j.end() && links->is_object()) {
        if (links->contains("targets")) a.targets = links->at("targets").get<std::vector<af::ArgumentId>>();
        if (links->contains("supersedes")) a.supersedes = links->at("supersedes").get<af::ArgumentId>();
        if (links->contains("resolves")) a.resolves = links->at("resolves").get<std::vector<af::ArgumentId>>();
        if (links->contains("endorses")) a.endorses = links->at("endorses").get<af::ArgumentId>();
    }
    if (auto st = j.find("status"); st != j.end() && st->is_string()) a.status = parse_round_status(st->get<std::string>());
    if (auto sg = j.find("subgoals"); sg != j.end() && sg->is_array()) {
        for (const auto& g : *sg) {
            a.subgoals.push_back({g.value("description", std::string{}), g.value("quality_dimension", std::string{}),
                                  g.value("concerns", std::vector<std::string>{})});
        }
    }
}

}  // namespace argneg::dialogue
