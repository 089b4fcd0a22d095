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

#include "argneg/dialogue/negotiation_log.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "argneg/common/errors.hpp"

namespace argneg::dialogue {

using nlohmann::json;

std::string_view to_string(Act a) noexcept {
    switch (a) {
        case Act::proposal: return "proposal";
        case Act::critique: return "critique";
        case Act::refinement: return "refinement";
    }
    return "proposal";
}

std::string_view to_string(RoundStatus s) noexcept {
    switch (s) {
        case RoundStatus::unresolved: return "unresolved";
        case RoundStatus::partial: return "partial";
        case RoundStatus::resolved: return "resolved";
    }
    return "unresolved";
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
        case Termination::converged: return "converged";
        case Termination::round_cap: return "round_cap";
        case Termination::aborted: return "aborted";
    }
    return "aborted";
}

Act parse_act(std::string_view s) {
    if (s == "proposal") return Act::proposal;
    if (s == "critique") return Act::critique;
    if (s == "refinement") return Act::refinement;
    throw InputError("unknown act '" + std::string(s) + "'");
}

RoundStatus parse_round_status(std::string_view s) {
    if (s == "unresolved") return RoundStatus::unresolved;
    if (s == "partial") return RoundStatus::partial;
    if (s == "resolved") return RoundStatus::resolved;
    throw InputError("unknown status '" + std::string(s) + "'");
}

Termination parse_termination(std::string_view s) {
    if (s == "converged") return Termination::converged;
    if (s == "round_cap") return Termination::round_cap;
    if (s == "aborted") return Termination::aborted;
    throw InputError("unknown termination '" + std::string(s) + "'");
}

std::size_t NegotiationLog::turn_count() const {
    std::size_t n = 0;
    for (const auto& s : sessions) n += s.turns.size();
    return n;
}

const Turn* NegotiationLog::find_turn(const TurnRef& ref) const {
    for (const auto& s : sessions) {
        if (s.id != ref.session) continue;
        for (const auto& t : s.turns) {
            if (t.turn_index == ref.turn_index) return &t;
        }
    }
    return nullptr;
}

namespace {

const json* member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    return &*it;
}

const json& require(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key);
    if (!v) throw ParseError(path + "/" + key, "missing required field");
    return *v;
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "expected a string");
    return v.get<std::string>();
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
    return v.get<int>();
}

std::string opt_string(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key);
    return v ? as_string(*v, path + "/" + key) : std::string{};
}

void expect_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw ParseError(path, "expected an object");
}

const json& expect_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path, "expected an array");
    return v;
}

template <typename F>
auto enum_field(const std::string& raw, const std::string& path, F parse) {
    try {
        return parse(raw);
    } catch (const InputError& e) {
        throw ParseError(path, e.what());
    }
}

TurnRef parse_ref(const json& v, const std::string& path) {
    expect_object(v, path);
    TurnRef r;
    r.session = as_string(require(v, "session", path), path + "/session");
    r.turn_index = as_int(require(v, "turn_index", path), path + "/turn_index");
    return r;
}

std::vector<TurnRef> parse_refs(const json& obj, const char* key, const std::string& path) {
    std::vector<TurnRef> out;
    const json* v = member(obj, key);
    if (!v) return out;
    const std::string p = path + "/" + key;
    expect_array(*v, p);
    for (std::size_t i = 0; i < v->size(); ++i) out.push_back(parse_ref((*v)[i], p + "/" + std::to_string(i)));
    return out;
}

std::vector<std::string> parse_strings(const json& obj, const char* key, const std::string& path) {
    std::vector<std::string> out;
    const json* v = member(obj, key);
    if (!v) return out;
    const std::string p = path + "/" + key;
    expect_array(*v, p);
    for (std::size_t i = 0; i < v->size(); ++i) out.push_back(as_string((*v)[i], p + "/" + std::to_string(i)));
    return out;
}

Turn parse_turn(const json& v, const std::string& session_id, const std::string& path) {
    expect_object(v, path);
    Turn t;
    t.session_id = session_id;
    t.round = as_int(require(v, "round", path), path + "/round");
    t.turn_index = as_int(require(v, "turn_index", path), path + "/turn_index");
    t.agent = as_string(require(v, "agent", path), path + "/agent");
    t.act = enum_field(as_string(require(v, "act", path), path + "/act"), path + "/act", parse_act);
    t.content = as_string(require(v, "content", path), path + "/content");
    t.quality_dimension = as_string(require(v, "quality_dimension", path), path + "/quality_dimension");
    t.rationale = opt_string(v, "rationale", path);
    t.targets = parse_refs(v, "targets", path);
    if (const json* s = member(v, "supersedes")) t.supersedes = parse_ref(*s, path + "/supersedes");
    t.resolves = parse_refs(v, "resolves", path);
    if (const json* e = member(v, "endorses")) t.endorses = parse_ref(*e, path + "/endorses");
    if (const json* st = member(v, "status")) {
        t.status = enum_field(as_string(*st, path + "/status"), path + "/status", parse_round_status);
    }
    if (const json* sg = member(v, "subgoals")) {
        const std::string p = path + "/subgoals";
        expect_array(*sg, p);
        for (std::size_t i = 0; i < sg->size(); ++i) {
            const std::string ip = p + "/" + std::to_string(i);
            const json& item = (*sg)[i];
            expect_object(item, ip);
            SubGoal g;
            g.description = as_string(require(item, "description", ip), ip + "/description");
            g.quality_dimension = opt_string(item, "quality_dimension", ip);
            g.concerns = parse_strings(item, "concerns", ip);
            t.subgoals.push_back(std::move(g));
        }
    }
    return t;
}

}  // namespace

NegotiationLog parse_log(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    return log_from_json(doc);
}

NegotiationLog log_from_json(const json& doc) {
    expect_object(doc, "");
    NegotiationLog log;
    if (const json* md = member(doc, "metadata")) {
        expect_object(*md, "/metadata");
        log.metadata.project = opt_string(*md, "project", "/metadata");
        if (const json* cfg = member(*md, "config")) {
            expect_object(*cfg, "/metadata/config");
            log.metadata.config = *cfg;
        }
    }
    const json& sessions = expect_array(require(doc, "sessions", ""), "/sessions");
    for (std::size_t i = 0; i < sessions.size(); ++i) {
        const std::string sp = "/sessions/" + std::to_string(i);
        const json& sv = sessions[i];
        expect_object(sv, sp);
        Session s;
        s.id = as_string(require(sv, "id", sp), sp + "/id");
        s.agents = parse_strings(sv, "agents", sp);
        if (const json* term = member(sv, "termination")) {
            s.termination = enum_field(as_string(*term, sp + "/termination"), sp + "/termination", parse_termination);
        }
        if (const json* label = member(sv, "conflict_label")) s.conflict_label = as_string(*label, sp + "/conflict_label");
        const json& turns = expect_array(require(sv, "turns", sp), sp + "/turns");
        for (std::size_t k = 0; k < turns.size(); ++k) {
            s.turns.push_back(parse_turn(turns[k], s.id, sp + "/turns/" + std::to_string(k)));
        }
        log.sessions.push_back(std::move(s));
    }
    if (const json* ra = member(doc, "recorded_attacks")) {
        expect_array(*ra, "/recorded_attacks");
        for (std::size_t i = 0; i < ra->size(); ++i) {
            const std::string p = "/recorded_attacks/" + std::to_string(i);
            const json& v = (*ra)[i];
            expect_object(v, p);
            RecordedAttack r;
            r.attacker = parse_ref(require(v, "attacker", p), p + "/attacker");
            r.target = parse_ref(require(v, "target", p), p + "/target");
            r.origin = as_string(require(v, "origin", p), p + "/origin");
            if (const json* c = member(v, "confidence")) {
                if (!c->is_number()) throw ParseError(p + "/confidence", "expected a number");
                r.confidence = c->get<double>();
            }
            r.rationale = opt_string(v, "rationale", p);
            log.recorded_attacks.push_back(std::move(r));
        }
    }
    validate(log);
    return log;
}

NegotiationLog load_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open log '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_log(buf.str());
}

void validate(const NegotiationLog& log) {
    std::optional<int> round_cap;
    if (auto it = log.metadata.config.find("round_cap"); it != log.metadata.config.end() && it->is_number_integer()) {
        round_cap = it->get<int>();
    }
    std::set<std::string> session_ids;
    for (std::size_t si = 0; si < log.sessions.size(); ++si) {
        const auto& s = log.sessions[si];
        const std::string sp = "/sessions/" + std::to_string(si);
        if (s.id.empty()) throw ValidationError(sp + "/id", "session id must be non-empty");
        if (!session_ids.insert(s.id).second) throw ValidationError(sp + "/id", "duplicate session id '" + s.id + "'");

        std::map<int, const Turn*> seen;
        int last_index = 0;
        int last_round = 0;
        for (std::size_t ti = 0; ti < s.turns.size(); ++ti) {
            const auto& t = s.turns[ti];
            const std::string tp = sp + "/turns/" + std::to_string(ti);
            if (t.turn_index <= 0) throw ValidationError(tp + "/turn_index", "turn index must be positive");
            if (seen.count(t.turn_index)) {
                throw ValidationError(tp + "/turn_index", "duplicate turn index " + std::to_string(t.turn_index));
            }
            if (t.turn_index < last_index) throw ValidationError(tp + "/turn_index", "turn indices must be strictly increasing");
            if (t.round <= 0) throw ValidationError(tp + "/round", "round must be positive");
            if (t.round < last_round) throw ValidationError(tp + "/round", "rounds must not decrease");
            if (round_cap && t.round > *round_cap) {
                throw ValidationError(tp + "/round", "round " + std::to_string(t.round) + " exceeds configured cap " +
                                                         std::to_string(*round_cap));
            }
            if (t.agent.empty()) throw ValidationError(tp + "/agent", "agent must be non-empty");
            if (!s.agents.empty() && std::find(s.agents.begin(), s.agents.end(), t.agent) == s.agents.end()) {
                throw ValidationError(tp + "/agent", "agent '" + t.agent + "' is not a participant of session '" + s.id + "'");
            }
            if (t.content.empty()) throw ValidationError(tp + "/content", "content must be non-empty");
            if (t.quality_dimension.empty()) throw ValidationError(tp + "/quality_dimension", "quality dimension must be non-empty");

            if (t.act == Act::critique && t.targets.empty()) {
                throw ValidationError(tp + "/targets", "critique must reference at least one target");
            }
            if (t.act != Act::critique && !t.targets.empty()) {
                throw ValidationError(tp + "/targets", "only critiques carry targets");
            }
            if (t.act == Act::refinement && !t.supersedes && t.resolves.empty()) {
                throw ValidationError(tp, "refinement must supersede or resolve an earlier turn");
            }
            if (t.act != Act::refinement && (t.supersedes || !t.resolves.empty())) {
                throw ValidationError(tp, "only refinements carry supersedes/resolves");
            }

            auto check_ref = [&](const TurnRef& r, const std::string& where) {
                if (r.session != s.id) {
                    throw ValidationError(where, "reference to session '" + r.session + "' outside session '" + s.id + "'");
                }
                if (!seen.count(r.turn_index)) {
                    throw ValidationError(where, "dangling reference to turn " + std::to_string(r.turn_index));
                }
            };
            for (std::size_t k = 0; k < t.targets.size(); ++k) check_ref(t.targets[k], tp + "/targets/" + std::to_string(k));
            if (t.supersedes) check_ref(*t.supersedes, tp + "/supersedes");
            for (std::size_t k = 0; k < t.resolves.size(); ++k) check_ref(t.resolves[k], tp + "/resolves/" + std::to_string(k));
            if (t.endorses) check_ref(*t.endorses, tp + "/endorses");

            seen.emplace(t.turn_index, &t);
            last_index = t.turn_index;
            last_round = t.round;
        }
    }
    for (std::size_t i = 0; i < log.recorded_attacks.size(); ++i) {
        const auto& r = log.recorded_attacks[i];
        const std::string p = "/recorded_attacks/" + std::to_string(i);
        if (!log.find_turn(r.attacker)) throw ValidationError(p + "/attacker", "dangling reference");
        if (!log.find_turn(r.target)) throw ValidationError(p + "/target", "dangling reference");
        if (r.attacker == r.target) throw ValidationError(p, "self-attack");
        if (r.origin != "semantic" && r.origin != "manual") {
            throw ValidationError(p + "/origin", "recorded attacks must be semantic or manual");
        }
        if (r.confidence < 0.0 || r.confidence > 1.0) throw ValidationError(p + "/confidence", "confidence outside [0,1]");
    }
}

json to_json(const TurnRef& ref) { return json{{"session", ref.session}, {"turn_index", ref.turn_index}}; }

namespace {

json refs_json(const std::vector<TurnRef>& refs) {
    json a = json::array();
    for (const auto& r : refs) a.push_back(to_json(r));
    return a;
}

json turn_json(const Turn& t) {
    json j{{"round", t.round},
           {"turn_index", t.turn_index},
           {"agent", t.agent},
           {"act", to_string(t.act)},
           {"content", t.content},
           {"quality_dimension", t.quality_dimension},
           {"rationale", t.rationale}};
    if (!t.targets.empty()) j["targets"] = refs_json(t.targets);
    if (t.supersedes) j["supersedes"] = to_json(*t.supersedes);
    if (!t.resolves.empty()) j["resolves"] = refs_json(t.resolves);
    if (t.endorses) j["endorses"] = to_json(*t.endorses);
    if (t.status) j["status"] = to_string(*t.status);
    if (!t.subgoals.empty()) {
        json sg = json::array();
        for (const auto& g : t.subgoals) {
            sg.push_back({{"description", g.description}, {"quality_dimension", g.quality_dimension}, {"concerns", g.concerns}});
        }
        j["subgoals"] = std::move(sg);
    }
    return j;
}

}  // namespace

json to_json(const NegotiationLog& log) {
    json sessions = json::array();
    for (const auto& s : log.sessions) {
        json sj{{"id", s.id}, {"agents", s.agents}};
        if (s.termination) sj["termination"] = to_string(*s.termination);
        if (s.conflict_label) sj["conflict_label"] = *s.conflict_label;
        json turns = json::array();
        for (const auto& t : s.turns) turns.push_back(turn_json(t));
        sj["turns"] = std::move(turns);
        sessions.push_back(std::move(sj));
    }
    json doc{{"metadata", {{"project", log.metadata.project}, {"config", log.metadata.config}}}, {"sessions", std::move(sessions)}};
    if (!log.recorded_attacks.empty()) {
        json ra = json::array();
        for (const auto& r : log.recorded_attacks) {
            ra.push_back({{"attacker", to_json(r.attacker)},
                          {"target", to_json(r.target)},
                          {"origin", r.origin},
                          {"confidence", r.confidence},
                          {"rationale", r.rationale}});
        }
        doc["recorded_attacks"] = std::move(ra);
    }
    return doc;
}

std::string serialize_log(const NegotiationLog& log, int indent) { return to_json(log).dump(indent); }

}  // namespace argneg::dialogue
