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

#include "argneg/kaos/goal_model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "argneg/common/errors.hpp"

namespace argneg::kaos {

std::string_view to_string(Level l) noexcept {
    switch (l) {
        case Level::strategic: return "Strategic";
        case Level::tactical: return "Tactical";
        case Level::operational: return "Operational";
    }
    return "Operational";
}

Level parse_level(std::string_view s) {
    for (auto l : {Level::strategic, Level::tactical, Level::operational})
        if (to_string(l) == s) return l;
    throw InputError("unknown KAOS level '" + std::string(s) + "'");
}

std::string_view to_string(RefinementMode m) noexcept { return m == RefinementMode::AND ? "AND" : "OR"; }

RefinementMode parse_refinement_mode(std::string_view s) {
    if (s == "AND") return RefinementMode::AND;
    if (s == "OR") return RefinementMode::OR;
    throw InputError("unknown refinement mode '" + std::string(s) + "'");
}

int rank(Level l) noexcept {
    switch (l) {
        case Level::strategic: return 3;
        case Level::tactical: return 2;
        case Level::operational: return 1;
    }
    return 1;
}

const GoalNode* KaosGraph::find(std::string_view id) const {
    for (const auto& g : goals)
        if (g.goal_id == id) return &g;
    return nullptr;
}

std::vector<std::string> KaosGraph::children(std::string_view id) const {
    std::vector<std::string> out;
    for (const auto& l : links)
        if (l.parent == id) out.push_back(l.child);
    return out;
}

std::vector<std::string> KaosGraph::parents(std::string_view id) const {
    std::vector<std::string> out;
    for (const auto& l : links)
        if (l.child == id) out.push_back(l.parent);
    return out;
}

std::vector<std::string> KaosGraph::find_cycle() const {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& g : goals) adj[g.goal_id];
    for (const auto& l : links) {
        adj[l.parent].push_back(l.child);
        adj[l.child];
    }
    enum Color { white, grey, black };
    std::map<std::string, Color> color;
    std::vector<std::string> stack;
    std::vector<std::string> cycle;
    std::function<bool(const std::string&)> dfs = [&](const std::string& u) {
        color[u] = grey;
        stack.push_back(u);
        for (const auto& v : adj[u]) {
            if (color[v] == grey) {
                auto it = std::find(stack.begin(), stack.end(), v);
                cycle.assign(it, stack.end());
                cycle.push_back(v);
                return true;
            }
            if (color[v] == white && dfs(v)) return true;
        }
        stack.pop_back();
        color[u] = black;
        return false;
    };
    for (const auto& [u, _] : adj)
        if (color[u] == white && dfs(u)) return cycle;
    return {};
}

bool KaosGraph::has_cycle() const { return !find_cycle().empty(); }

void to_json(nlohmann::json& j, const GoalNode& g) {
    j = nlohmann::json{{"goal_id", g.goal_id},
                       {"description", g.description},
                       {"quality_dimension", g.quality_dimension},
                       {"level", g.level ? nlohmann::json(to_string(*g.level)) : nlohmann::json(nullptr)},
                       {"rationale", g.rationale},
                       {"provenance", g.provenance},
                       {"merged_ancestors", g.merged_ancestors}};
}

void from_json(const nlohmann::json& j, GoalNode& g) {
    g.goal_id = j.at("goal_id").get<std::string>();
    g.description = j.value("description", std::string{});
    g.quality_dimension = j.value("quality_dimension", std::string{});
    if (j.contains("level") && !j["level"].is_null()) g.level = parse_level(j["level"].get<std::string>());
    else g.level.reset();
    g.rationale = j.value("rationale", std::string{});
    g.provenance = j.value("provenance", std::vector<ArgumentId>{});
    g.merged_ancestors = j.value("merged_ancestors", std::vector<ArgumentId>{});
}

void to_json(nlohmann::json& j, const KaosGraph& k) {
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : k.links) links.push_back({{"parent", l.parent}, {"child", l.child}, {"mode", to_string(l.mode)}});
    j = nlohmann::json{{"goals", k.goals}, {"links", links}};
}

void from_json(const nlohmann::json& j, KaosGraph& k) {
    k.goals = j.at("goals").get<std::vector<GoalNode>>();
    k.links.clear();
    for (const auto& l : j.at("links"))
        k.links.push_back({l.at("parent").get<std::string>(), l.at("child").get<std::string>(),
                           parse_refinement_mode(l.value("mode", std::string("AND")))});
}

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_goal(std::ostringstream& os, const KaosGraph& k, const GoalNode& g, const std::string& mode, int depth,
                std::vector<std::string>& path) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    os << pad << "<goal id=\"" << xml_escape(g.goal_id) << "\" level=\""
       << (g.level ? to_string(*g.level) : std::string_view("")) << "\" quality=\"" << xml_escape(g.quality_dimension)
       << "\"";
    if (!mode.empty()) os << " refinement=\"" << mode << "\"";
    os << ">\n";
    os << pad << "  <description>" << xml_escape(g.description) << "</description>\n";
    os << pad << "  <rationale>" << xml_escape(g.rationale) << "</rationale>\n";
    for (const auto& p : g.provenance) os << pad << "  <provenance argument=\"" << xml_escape(p.str()) << "\"/>\n";
    for (const auto& p : g.merged_ancestors)
        os << pad << "  <ancestor argument=\"" << xml_escape(p.str()) << "\"/>\n";
    if (std::find(path.begin(), path.end(), g.goal_id) == path.end()) {
        path.push_back(g.goal_id);
        for (const auto& l : k.links)
            if (l.parent == g.goal_id)
                if (const auto* c = k.find(l.child)) write_goal(os, k, *c, std::string(to_string(l.mode)), depth + 1, path);
        path.pop_back();
    }
    os << pad << "</goal>\n";
}

}  // namespace

std::string to_xml(const KaosGraph& k) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<goalModel>\n";
    std::vector<std::string> path;
    for (const auto& g : k.goals)
        if (k.parents(g.goal_id).empty()) write_goal(os, k, g, "", 1, path);
    os << "</goalModel>\n";
    return os.str();
}

}  // namespace argneg::kaos
