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

#include "argneg/resolve/resolver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "argneg/af/semantics.hpp"
#include "argneg/common/errors.hpp"
#include "argneg/common/text.hpp"

namespace argneg::resolve {

using dialogue::Act;

std::string_view to_string(PreferredStrategy s) noexcept {
    return s == PreferredStrategy::intersection ? "intersection" : "priority_guided";
}

PreferredStrategy parse_preferred_strategy(std::string_view s) {
    if (s == "intersection") return PreferredStrategy::intersection;
    if (s == "priority" || s == "priority_guided" || s == "priority-guided") return PreferredStrategy::priority_guided;
    throw ConfigError("unknown preferred strategy '" + std::string(s) + "' (expected intersection|priority)");
}

std::string_view to_string(ArgStatus s) noexcept {
    switch (s) {
        case ArgStatus::accepted: return "accepted";
        case ArgStatus::rejected: return "rejected";
        case ArgStatus::undecided: return "undecided";
    }
    return "undecided";
}

const std::vector<std::string>& quality_axes() {
    static const std::vector<std::string> axes{"safety", "efficiency", "trustworthiness", "green", "responsibility"};
    return axes;
}

Weights uniform_weights() {
    Weights w;
    for (const auto& a : quality_axes()) w[a] = 0.2;
    return w;
}

Weights safety_critical_weights() {
    Weights w;
    for (const auto& a : quality_axes()) w[a] = 0.175;
    w["safety"] = 0.3;
    return w;
}

std::string axis_key(std::string_view quality) { return text::to_lower(quality); }

Weights parse_weights(std::string_view arg) {
    if (arg == "uniform") return uniform_weights();
    if (arg == "safety-critical" || arg == "safety_critical") return safety_critical_weights();
    Weights w;
    for (const auto& item : text::split_list(arg)) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("weight '" + item + "' is not key=value");
        std::string key = axis_key(item.substr(0, eq));
        while (!key.empty() && key.back() == ' ') key.pop_back();
        try {
            std::size_t used = 0;
            const std::string value = item.substr(eq + 1);
            const double v = std::stod(value, &used);
            if (used == 0) throw std::invalid_argument(value);
            w[key] = v;
        } catch (const std::logic_error&) {
            throw ConfigError("weight '" + item + "' has a non-numeric value");
        }
    }
    if (w.empty()) throw ConfigError("empty weight list");
    return w;
}

void ResolutionConfig::validate() const {
    double sum = 0.0;
    for (const auto& [k, v] : weights) {
        if (!(v >= 0.0)) throw ConfigError("weight for '" + k + "' is negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("weights must sum to 1 (got " + std::to_string(sum) + ")");
}

double priority_score(const af::Extension& e, const AttackGraph& graph, const Weights& weights) {
    double s = 0.0;
    for (const auto& id : e.members) {
        const auto& q = axis_key(graph.at(id).quality);
        auto it = weights.find(q);
        if (it == weights.end()) throw ConfigError("no weight for quality axis '" + q + "' of " + id.str());
        s += it->second;
    }
    return s;
}

std::size_t select_priority(std::span<const af::Extension> extensions, const AttackGraph& graph,
                            const Weights& weights, bool* tie) {
    if (extensions.empty()) throw InputError("no extension to select from");
    std::vector<double> scores;
    scores.reserve(extensions.size());
    for (const auto& e : extensions) scores.push_back(priority_score(e, graph, weights));
    const double best = *std::max_element(scores.begin(), scores.end());
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    std::size_t pick = extensions.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (best - scores[i] <= tol) {
            if (pick == extensions.size()) pick = i;
            ++count;
        }
    }
    if (tie) *tie = count > 1;
    return pick;
}

bool DefenseChain::complete() const {
    return std::all_of(steps.begin(), steps.end(), [](const DefenseStep& s) { return s.defender.has_value(); });
}

DefenseChain defense_chain(const ArgumentId& a, const AttackGraph& graph, const af::Extension& extension) {
    if (!extension.contains(a)) throw DomainError(a.str() + " is not in the accepted extension");
    if (!graph.find(a)) throw InputError("unknown argument " + a.str());
    DefenseChain chain{a, {}};
    std::vector<const attacks::AttackEdge*> in = graph.incoming(a);
    std::sort(in.begin(), in.end(), [](auto* x, auto* y) { return x->attacker < y->attacker; });
    for (const auto* e : in) {
        DefenseStep step;
        step.attacker = e->attacker;
        step.attack_origin = std::string(attacks::to_string(e->origin));
        std::vector<const attacks::AttackEdge*> counters;
        for (const auto* c : graph.incoming(e->attacker))
            if (extension.contains(c->attacker)) counters.push_back(c);
        if (!counters.empty()) {
            const auto* c = *std::min_element(counters.begin(), counters.end(),
                                              [](auto* x, auto* y) { return x->attacker < y->attacker; });
            step.defender = c->attacker;
            step.defense_origin = std::string(attacks::to_string(c->origin));
            step.via = c->via;
        }
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

bool trace_complete(const ArgumentId& a, const AttackGraph& graph) {
    const auto* cur = graph.find(a);
    if (!cur) return false;
    std::vector<const dialogue::Argument*> chain;
    std::set<ArgumentId> members;
    while (true) {
        if (!members.insert(cur->id).second) return false;
        chain.push_back(cur);
        if (cur->act == Act::proposal) break;
        if (cur->act != Act::refinement || !cur->supersedes) return false;
        cur = graph.find(*cur->supersedes);
        if (!cur) return false;
    }
    for (const auto* m : chain) {
        for (const auto& r : m->resolves)
            if (!graph.find(r)) return false;
        for (const auto* e : graph.outgoing(m->id)) {
            if (e->origin != attacks::Origin::p3) continue;
            const auto* critique = graph.find(e->target);
            if (!critique) return false;
            bool anchored = false;
            for (const auto* p1 : graph.outgoing(critique->id))
                if (p1->origin == attacks::Origin::p1 && members.count(p1->target)) anchored = true;
            if (!anchored) return false;
        }
    }
    return true;
}

std::optional<double> trace_completeness(const Resolution& resolution, const AttackGraph& graph) {
    if (resolution.accepted.empty()) return std::nullopt;
    std::size_t ok = 0;
    for (const auto& r : resolution.accepted)
        if (trace_complete(r.argument, graph)) ++ok;
    return static_cast<double>(ok) / static_cast<double>(resolution.accepted.size());
}

Resolution resolve(const AttackGraph& graph, const ResolutionConfig& config) {
    const bool uses_weights =
        config.semantics == af::Semantics::preferred && config.strategy == PreferredStrategy::priority_guided;
    if (uses_weights) config.validate();

    Resolution out;
    out.config = config;
    if (graph.arguments.empty()) {
        out.grounded.semantics = af::Semantics::grounded;
        out.extension.semantics = config.semantics;
        out.preferred.push_back({{}, af::Semantics::preferred});
        return out;
    }
    const af::Framework fw = graph.framework();
    out.grounded = af::grounded_extension(fw);
    if (fw.size() <= af::kMaxPreferredArguments) {
        out.preferred = af::preferred_extensions(fw);
    } else {
        out.notes.push_back("preferred extensions not enumerated: more than " +
                            std::to_string(af::kMaxPreferredArguments) + " arguments");
        if (config.semantics == af::Semantics::preferred)
            throw InputError("preferred semantics supports at most " + std::to_string(af::kMaxPreferredArguments) +
                             " arguments");
    }

    if (config.semantics == af::Semantics::grounded) {
        out.extension = out.grounded;
    } else if (config.strategy == PreferredStrategy::intersection) {
        af::ArgumentIds common = out.preferred.front().members;
        for (const auto& e : out.preferred) {
            af::ArgumentIds next;
            std::set_intersection(common.begin(), common.end(), e.members.begin(), e.members.end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        out.extension = {std::move(common), af::Semantics::preferred};
    } else {
        const std::size_t pick = select_priority(out.preferred, graph, config.weights, &out.priority_tie);
        out.extension = out.preferred[pick];
        if (out.priority_tie)
            out.notes.push_back("priority-guided selection tied; canonical extension order decided");
    }

    for (const auto& a : graph.arguments) {
        ArgStatus s = ArgStatus::undecided;
        if (out.extension.contains(a.id)) {
            s = ArgStatus::accepted;
        } else {
            for (const auto* e : graph.incoming(a.id))
                if (out.extension.contains(e->attacker)) s = ArgStatus::rejected;
        }
        out.status.emplace(a.id, s);
    }
    for (const auto& a : graph.arguments) {
        if (!out.extension.contains(a.id)) continue;
        out.defense_chains.emplace(a.id, defense_chain(a.id, graph, out.extension));
        if (a.act != Act::critique) out.accepted.push_back({a.content, a.id, a.quality, a.agent});
    }
    return out;
}

}  // namespace argneg::resolve
