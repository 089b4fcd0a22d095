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

#include "argneg/attacks/builder.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "argneg/common/errors.hpp"

namespace argneg::attacks {

namespace {

using dialogue::Act;

class EdgeCollector {
public:
    bool add(AttackEdge e) {
        if (!seen_.insert({e.attacker, e.target}).second) return false;
        edges_.push_back(std::move(e));
        return true;
    }
    std::vector<AttackEdge> take() { return std::move(edges_); }

private:
    std::set<std::pair<ArgumentId, ArgumentId>> seen_;
    std::vector<AttackEdge> edges_;
};

}  // namespace

EdgeSet rule_based_attacks(std::span<const Argument> args, const dialogue::NegotiationLog& log) {
    EdgeSet out;
    if (args.size() != log.turn_count())
        out.warnings.push_back({"argument_count_mismatch", "argument set does not cover every turn of the log"});

    std::unordered_map<ArgumentId, const Argument*> by_id;
    for (const auto& a : args) by_id.emplace(a.id, &a);

    auto resolve = [&](const Argument& from, const ArgumentId& ref, std::string_view field) -> const Argument* {
        auto it = by_id.find(ref);
        if (it == by_id.end()) {
            out.warnings.push_back({"dangling_reference", from.id.str() + "." + std::string(field) + " -> " + ref.str()});
            return nullptr;
        }
        if (it->second->source.session_id != from.source.session_id) {
            out.warnings.push_back({"cross_session_reference",
                                    from.id.str() + "." + std::string(field) + " crosses into session " +
                                        it->second->source.session_id});
            return nullptr;
        }
        if (ref == from.id) {
            out.warnings.push_back({"self_reference", from.id.str() + "." + std::string(field) + " references itself"});
            return nullptr;
        }
        return it->second;
    };

    EdgeCollector edges;
    for (const auto& a : args) {
        if (a.act == Act::critique) {
            for (const auto& t : a.targets) {
                const Argument* target = resolve(a, t, "targets");
                if (!target) continue;
                if (target->act != Act::proposal)
                    out.warnings.push_back({"p1_non_proposal_target",
                                            a.id.str() + " critiques " + t.str() + ", a " +
                                                std::string(dialogue::to_string(target->act))});
                edges.add({a.id, t, Origin::p1, 1.0, a.id.str() + " rejects " + t.str(), std::nullopt});
            }
        }
        if (a.act != Act::refinement) continue;
        if (a.supersedes) {
            if (const Argument* prior = resolve(a, *a.supersedes, "supersedes")) {
                if (prior->agent == a.agent)
                    edges.add({a.id, prior->id, Origin::p2, 1.0, a.id.str() + " supersedes " + prior->id.str(),
                               std::nullopt});
                else
                    out.warnings.push_back({"p2_cross_agent", a.id.str() + " (" + a.agent + ") supersedes " +
                                                                  prior->id.str() + " (" + prior->agent + ")"});
            }
        }
        for (const auto& r : a.resolves) {
            const Argument* critique = resolve(a, r, "resolves");
            if (!critique) continue;
            if (critique->act != Act::critique)
                out.warnings.push_back({"p3_non_critique_target", a.id.str() + " resolves " + r.str() +
                                                                       ", which is not a critique"});
            edges.add({a.id, r, Origin::p3, 1.0, a.id.str() + " resolves " + r.str(), std::nullopt});
        }
    }
    out.edges = edges.take();
    return out;
}

Survivors session_survivors(std::span<const Argument> args, std::span<const AttackEdge> rule_edges,
                            const std::string& session_id) {
    Survivors out;
    std::set<ArgumentId> in_session;
    for (const auto& a : args)
        if (a.source.session_id == session_id) in_session.insert(a.id);

    std::set<ArgumentId> attacked;
    for (const auto& e : rule_edges)
        if (is_rule_based(e.origin) && in_session.count(e.attacker) && in_session.count(e.target))
            attacked.insert(e.target);

    const Argument* latest_refinement = nullptr;
    bool any_candidate = false;
    for (const auto& a : args) {
        if (a.source.session_id != session_id || a.act == Act::critique) continue;
        any_candidate = true;
        if (!attacked.count(a.id)) out.ids.push_back(a.id);
        if (a.act == Act::refinement &&
            (!latest_refinement || std::pair(a.source.round, a.source.turn_index) >
                                       std::pair(latest_refinement->source.round, latest_refinement->source.turn_index)))
            latest_refinement = &a;
    }
    if (!any_candidate) {
        out.warnings.push_back({"no_candidates", "session " + session_id + " has no proposal or refinement"});
        return out;
    }
    if (out.ids.empty()) {
        if (latest_refinement) {
            out.ids.push_back(latest_refinement->id);
            out.warnings.push_back({"survivor_fallback", "session " + session_id + ": every candidate attacked, keeping " +
                                                             latest_refinement->id.str()});
        } else {
            out.warnings.push_back({"no_survivor", "session " + session_id + ": every proposal attacked, no refinement"});
        }
    }
    return out;
}

std::map<std::string, std::vector<ArgumentId>> survivors_by_session(std::span<const Argument> args,
                                                                    std::span<const AttackEdge> rule_edges,
                                                                    Warnings* warnings) {
    std::map<std::string, std::vector<ArgumentId>> out;
    std::vector<std::string> order;
    for (const auto& a : args)
        if (std::find(order.begin(), order.end(), a.source.session_id) == order.end())
            order.push_back(a.source.session_id);
    for (const auto& s : order) {
        auto r = session_survivors(args, rule_edges, s);
        if (warnings) warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());
        out[s] = std::move(r.ids);
    }
    return out;
}

Warnings validate_support(std::span<const SupportEdge> supports, std::span<const AttackEdge> attacks) {
    std::set<std::pair<ArgumentId, ArgumentId>> att;
    for (const auto& e : attacks) att.insert({e.attacker, e.target});
    Warnings out;
    for (const auto& s : supports)
        for (const auto& e : attacks)
            if (e.target == s.supported && !att.count({s.supporter, e.attacker}))
                out.push_back({"support_without_defense", s.supporter.str() + " supports " + s.supported.str() +
                                                              " but does not attack its attacker " + e.attacker.str()});
    return out;
}

EdgeSet recorded_attacks(std::span<const Argument> args, const dialogue::NegotiationLog& log, const GateConfig& gate) {
    gate.validate();
    EdgeSet out;
    auto ids = dialogue::turn_argument_ids(log);
    std::set<ArgumentId> present;
    for (const auto& a : args) present.insert(a.id);
    const double theta_eff = gate.effective();
    for (const auto& r : log.recorded_attacks) {
        auto a = ids.find(r.attacker);
        auto t = ids.find(r.target);
        if (a == ids.end() || t == ids.end() || !present.count(a->second) || !present.count(t->second)) {
            out.warnings.push_back({"recorded_attack_unresolved", r.attacker.session + "#" +
                                                                      std::to_string(r.attacker.turn_index) + " -> " +
                                                                      r.target.session + "#" +
                                                                      std::to_string(r.target.turn_index)});
            continue;
        }
        const Origin origin = parse_origin(r.origin);
        if (origin == Origin::semantic && r.confidence < theta_eff) {
            out.warnings.push_back({"recorded_attack_gated", a->second.str() + " -> " + t->second.str() +
                                                                 " below theta_eff"});
            continue;
        }
        out.edges.push_back({a->second, t->second, origin, r.confidence, r.rationale, std::nullopt});
    }
    return out;
}

}  // namespace argneg::attacks
