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

#include "argneg/attacks/attack_graph.hpp"

#include <set>
#include <unordered_set>

#include "argneg/common/errors.hpp"

namespace argneg::attacks {

std::string_view to_string(Origin o) noexcept {
    switch (o) {
        case Origin::p1: return "p1";
        case Origin::p2: return "p2";
        case Origin::p3: return "p3";
        case Origin::semantic: return "semantic";
        case Origin::arbitration: return "arbitration";
        case Origin::manual: return "manual";
    }
    return "manual";
}

Origin parse_origin(std::string_view s) {
    for (Origin o : {Origin::p1, Origin::p2, Origin::p3, Origin::semantic, Origin::arbitration, Origin::manual})
        if (to_string(o) == s) return o;
    throw InputError("unknown attack origin '" + std::string(s) + "'");
}

bool is_rule_based(Origin o) noexcept {
    return o == Origin::p1 || o == Origin::p2 || o == Origin::p3 || o == Origin::arbitration;
}

void to_json(nlohmann::json& j, const AttackEdge& e) {
    j = nlohmann::json{{"attacker", e.attacker},
                       {"target", e.target},
                       {"origin", to_string(e.origin)},
                       {"confidence", e.confidence}};
    if (!e.rationale.empty()) j["rationale"] = e.rationale;
    if (e.via) j["via"] = *e.via;
}

void from_json(const nlohmann::json& j, AttackEdge& e) {
    if (!j.contains("attacker") || !j.contains("target")) throw InputError("attack edge needs attacker and target");
    e.attacker = j.at("attacker").get<ArgumentId>();
    e.target = j.at("target").get<ArgumentId>();
    e.origin = parse_origin(j.value("origin", std::string("manual")));
    e.confidence = j.value("confidence", 1.0);
    e.rationale = j.value("rationale", std::string());
    if (j.contains("via") && !j["via"].is_null()) e.via = j["via"].get<ArgumentId>();
    else e.via.reset();
}

af::Framework AttackGraph::framework() const {
    std::vector<ArgumentId> ids;
    ids.reserve(arguments.size());
    for (const auto& a : arguments) ids.push_back(a.id);
    std::vector<af::Attack> pairs;
    pairs.reserve(attacks.size());
    for (const auto& e : attacks) pairs.push_back({e.attacker, e.target});
    return af::Framework(std::move(ids), pairs);
}

void AttackGraph::validate() const {
    std::unordered_set<ArgumentId> ids;
    for (const auto& a : arguments)
        if (!ids.insert(a.id).second) throw InputError("duplicate argument id " + a.id.str());
    std::set<std::pair<ArgumentId, ArgumentId>> seen;
    for (const auto& e : attacks) {
        if (!ids.count(e.attacker) || !ids.count(e.target))
            throw InputError("attack edge " + e.attacker.str() + " -> " + e.target.str() + " has an unknown endpoint");
        if (!seen.insert({e.attacker, e.target}).second)
            throw InputError("duplicate attack edge " + e.attacker.str() + " -> " + e.target.str());
        if (is_rule_based(e.origin) && e.attacker == e.target)
            throw InputError("rule-based self-attack on " + e.attacker.str());
        if (e.confidence < 0.0 || e.confidence > 1.0)
            throw InputError("confidence out of range on " + e.attacker.str() + " -> " + e.target.str());
    }
    for (const auto& s : supports)
        if (!ids.count(s.supporter) || !ids.count(s.supported))
            throw InputError("support edge " + s.supporter.str() + " -> " + s.supported.str() + " has an unknown endpoint");
}

const Argument* AttackGraph::find(const ArgumentId& id) const {
    for (const auto& a : arguments)
        if (a.id == id) return &a;
    return nullptr;
}

const Argument& AttackGraph::at(const ArgumentId& id) const {
    if (const auto* a = find(id)) return *a;
    throw InputError("unknown argument " + id.str());
}

const AttackEdge* AttackGraph::edge(const ArgumentId& attacker, const ArgumentId& target) const {
    for (const auto& e : attacks)
        if (e.attacker == attacker && e.target == target) return &e;
    return nullptr;
}

std::vector<const AttackEdge*> AttackGraph::incoming(const ArgumentId& id) const {
    std::vector<const AttackEdge*> out;
    for (const auto& e : attacks)
        if (e.target == id) out.push_back(&e);
    return out;
}

std::vector<const AttackEdge*> AttackGraph::outgoing(const ArgumentId& id) const {
    std::vector<const AttackEdge*> out;
    for (const auto& e : attacks)
        if (e.attacker == id) out.push_back(&e);
    return out;
}

af::EdgeLabels AttackGraph::labels() const {
    af::EdgeLabels out;
    for (const auto& e : attacks) out.emplace(af::Attack{e.attacker, e.target}, std::string(to_string(e.origin)));
    return out;
}

std::map<std::string, std::size_t> AttackGraph::origin_counts() const {
    std::map<std::string, std::size_t> out;
    for (const auto& e : attacks) ++out[std::string(to_string(e.origin))];
    return out;
}

}  // namespace argneg::attacks
