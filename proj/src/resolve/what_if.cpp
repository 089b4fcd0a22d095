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

#include "argneg/resolve/what_if.hpp"

#include <algorithm>

#include "argneg/common/errors.hpp"
#include "argneg/common/text.hpp"

namespace argneg::resolve {

const JournalEntry& Journal::append(std::string operation, nlohmann::json payload) {
    entries_.push_back({entries_.size() + 1, text::utc_timestamp(), std::move(operation), std::move(payload)});
    return entries_.back();
}

nlohmann::json to_json(const JournalEntry& e) {
    return {{"sequence", e.sequence}, {"timestamp", e.timestamp}, {"operation", e.operation}, {"payload", e.payload}};
}

nlohmann::json to_json(const Journal& j) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : j.entries()) out.push_back(to_json(e));
    return out;
}

ExtensionDelta extension_delta(const af::Extension& before, const af::Extension& after) {
    ExtensionDelta d;
    std::set_difference(after.members.begin(), after.members.end(), before.members.begin(), before.members.end(),
                        std::back_inserter(d.entered));
    std::set_difference(before.members.begin(), before.members.end(), after.members.begin(), after.members.end(),
                        std::back_inserter(d.left));
    return d;
}

WhatIf what_if_remove_attack(const AttackGraph& graph, const af::Attack& edge, const ResolutionConfig& config,
                             Journal* journal) {
    AttackGraph next = graph;
    auto it = std::find_if(next.attacks.begin(), next.attacks.end(), [&](const attacks::AttackEdge& e) {
        return e.attacker == edge.attacker && e.target == edge.target;
    });
    if (it == next.attacks.end())
        throw InputError("no attack " + edge.attacker.str() + " -> " + edge.target.str());
    const std::string origin{attacks::to_string(it->origin)};
    next.attacks.erase(it);
    const Resolution before = resolve(graph, config);
    Resolution after = resolve(next, config);
    if (journal)
        journal->append("remove_attack", {{"attacker", edge.attacker}, {"target", edge.target}, {"origin", origin}});
    ExtensionDelta d = extension_delta(before.extension, after.extension);
    return {std::move(next), std::move(after), std::move(d)};
}

WhatIf what_if_inject(const AttackGraph& graph, dialogue::Argument argument, std::vector<attacks::AttackEdge> edges,
                      const ResolutionConfig& config, Journal* journal) {
    if (argument.id.empty()) throw InputError("injected argument needs an id");
    if (graph.find(argument.id)) throw InputError("argument id " + argument.id.str() + " already exists");
    AttackGraph next = graph;
    next.arguments.push_back(argument);
    for (auto& e : edges) {
        if (e.attacker != argument.id && e.target != argument.id)
            throw InputError("injected edge " + e.attacker.str() + " -> " + e.target.str() +
                             " does not involve the new argument");
        next.attacks.push_back(e);
    }
    next.validate();
    const Resolution before = resolve(graph, config);
    Resolution after = resolve(next, config);
    if (journal) {
        nlohmann::json es = nlohmann::json::array();
        for (const auto& e : edges) es.push_back(e);
        journal->append("inject_argument", {{"argument", argument}, {"attacks", es}});
    }
    ExtensionDelta d = extension_delta(before.extension, after.extension);
    return {std::move(next), std::move(after), std::move(d)};
}

}  // namespace argneg::resolve
