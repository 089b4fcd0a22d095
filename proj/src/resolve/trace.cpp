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

#include "argneg/resolve/trace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "argneg/common/errors.hpp"

namespace argneg::resolve {

using dialogue::Act;

namespace {

void add_dimension(std::vector<std::string>& dims, const std::string& q) {
    if (!q.empty() && std::find(dims.begin(), dims.end(), q) == dims.end()) dims.push_back(q);
}

}  // namespace

TraceCard trace_card(const ArgumentId& argument, const Resolution& resolution, const AttackGraph& graph) {
    auto it = std::find_if(resolution.accepted.begin(), resolution.accepted.end(),
                           [&](const AcceptedRequirement& r) { return r.argument == argument; });
    if (it == resolution.accepted.end()) throw DomainError(argument.str() + " is not an accepted requirement");
    const auto& arg = graph.at(argument);

    TraceCard card;
    card.requirement = arg.content;
    card.argument = arg.id;
    card.act = std::string(dialogue::to_string(arg.act));
    card.agent = arg.agent;
    card.session = arg.source.session_id;
    card.round = arg.source.round;
    card.quality = arg.quality;
    if (resolution.grounded.contains(argument)) card.accepted_under.push_back("grounded");
    if (!resolution.preferred.empty() &&
        std::all_of(resolution.preferred.begin(), resolution.preferred.end(),
                    [&](const af::Extension& e) { return e.contains(argument); }))
        card.accepted_under.push_back("preferred");
    else if (resolution.extension.semantics == af::Semantics::preferred && resolution.extension.contains(argument))
        card.accepted_under.push_back("preferred (selected)");

    add_dimension(card.dimensions, arg.quality);
    std::set<ArgumentId> visited;
    const dialogue::Argument* cur = &arg;
    while (cur) {
        if (!visited.insert(cur->id).second) {
            card.gaps.push_back("supersedes cycle at " + cur->id.str());
            break;
        }
        for (const auto& r : cur->resolves) {
            const auto* critique = graph.find(r);
            if (!critique) {
                card.backward.push_back({cur->id, r, "gap", "resolved critique missing from graph"});
                card.gaps.push_back(r.str() + " unresolvable");
                continue;
            }
            add_dimension(card.dimensions, critique->quality);
            card.backward.push_back({cur->id, r, "p3", cur->id.str() + " resolves " + r.str()});
        }
        if (cur->act == Act::proposal) break;
        if (!cur->supersedes) {
            card.gaps.push_back(cur->id.str() + " has no superseded predecessor");
            break;
        }
        const auto* prev = graph.find(*cur->supersedes);
        if (!prev) {
            card.backward.push_back({cur->id, *cur->supersedes, "gap", "superseded argument missing from graph"});
            card.gaps.push_back(cur->supersedes->str() + " unresolvable");
            break;
        }
        add_dimension(card.dimensions, prev->quality);
        card.backward.push_back({cur->id, prev->id, "p2", cur->id.str() + " supersedes " + prev->id.str()});
        cur = prev;
    }
    if (!trace_complete(argument, graph) && card.gaps.empty()) card.gaps.push_back("unanchored critique resolution");
    card.complete = card.gaps.empty();

    if (auto d = resolution.defense_chains.find(argument); d != resolution.defense_chains.end())
        card.defense = d->second.steps;
    for (const auto& s : card.defense) {
        if (const auto* a = graph.find(s.attacker)) add_dimension(card.dimensions, a->quality);
        if (!s.defender) card.gaps.push_back("attacker " + s.attacker.str() + " is not countered");
    }
    card.complete = card.gaps.empty();
    return card;
}

std::vector<TraceCard> trace_cards(const Resolution& resolution, const AttackGraph& graph) {
    std::vector<TraceCard> out;
    for (const auto& r : resolution.accepted) out.push_back(trace_card(r.argument, resolution, graph));
    return out;
}

nlohmann::json to_json(const DefenseStep& s) {
    nlohmann::json j{{"attacker", s.attacker}, {"attack_origin", s.attack_origin}};
    j["defender"] = s.defender ? nlohmann::json(*s.defender) : nlohmann::json(nullptr);
    j["defense_origin"] = s.defense_origin;
    if (s.via) j["via"] = *s.via;
    return j;
}

nlohmann::json to_json(const TraceCard& c) {
    nlohmann::json back = nlohmann::json::array();
    for (const auto& s : c.backward) back.push_back({{"from", s.from}, {"to", s.to}, {"label", s.label}, {"note", s.note}});
    nlohmann::json def = nlohmann::json::array();
    for (const auto& s : c.defense) def.push_back(to_json(s));
    return {{"requirement", c.requirement},
            {"origin",
             {{"argument", c.argument}, {"act", c.act}, {"agent", c.agent}, {"session", c.session}, {"round", c.round}}},
            {"quality", c.quality},
            {"accepted_under", c.accepted_under},
            {"backward_trace", back},
            {"defense", def},
            {"dimensions", c.dimensions},
            {"complete", c.complete},
            {"gaps", c.gaps}};
}

std::string render_markdown(const std::vector<TraceCard>& cards) {
    std::ostringstream os;
    os << "# Trace cards\n";
    for (const auto& c : cards) {
        os << "\n## " << c.argument << ": " << c.requirement << "\n\n";
        os << "- Origin: " << c.act << " by " << c.agent << ", session " << c.session << ", round " << c.round << "\n";
        os << "- Quality: " << c.quality << "\n";
        os << "- Accepted under: ";
        for (std::size_t i = 0; i < c.accepted_under.size(); ++i) os << (i ? ", " : "") << c.accepted_under[i];
        os << "\n- Dimensions: ";
        for (std::size_t i = 0; i < c.dimensions.size(); ++i) os << (i ? ", " : "") << c.dimensions[i];
        os << "\n\nBackward trace:\n";
        if (c.backward.empty()) os << "\n- (none)\n";
        for (const auto& s : c.backward) os << "\n- " << s.from << " -[" << s.label << "]-> " << s.to;
        if (!c.backward.empty()) os << "\n";
        os << "\nDefense:\n";
        if (c.defense.empty()) os << "\n- unattacked\n";
        for (const auto& s : c.defense) {
            os << "\n- " << s.attacker << " (" << s.attack_origin << ") countered by ";
            if (s.defender) os << *s.defender << " (" << s.defense_origin << ")";
            else os << "nothing";
            if (s.via) os << " via " << *s.via;
        }
        if (!c.defense.empty()) os << "\n";
        if (!c.gaps.empty()) {
            os << "\nGaps:\n";
            for (const auto& g : c.gaps) os << "\n- " << g;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace argneg::resolve
