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

#include <algorithm>
#include <cctype>
#include <set>

#include "argneg/attacks/builder.hpp"
#include "argneg/common/errors.hpp"
#include "argneg/common/text.hpp"

namespace argneg::attacks {

namespace {

std::size_t highest_numeric_id(std::span<const Argument> args) {
    std::size_t best = 0;
    for (const auto& a : args) {
        const auto& s = a.id.str();
        if (s.size() < 2 || s[0] != 'a') continue;
        if (!std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); })) continue;
        best = std::max<std::size_t>(best, std::stoul(s.substr(1)));
    }
    return best;
}

std::string shared_phrase(const std::string& a, const std::string& b) {
    auto other = text::word_bag(b);
    std::vector<std::string> common;
    for (auto& t : text::tokenize(a)) {
        if (t.size() < 3 || !other.count(t)) continue;
        if (std::find(common.begin(), common.end(), t) != common.end()) continue;
        common.push_back(std::move(t));
        if (common.size() == 6) break;
    }
    std::string out;
    for (const auto& t : common) out += (out.empty() ? "" : " ") + t;
    return out.empty() ? "a shared resource" : out;
}

Argument critique_for(const Argument& author_side, const Argument& objected, const std::string& phrase, std::size_t number,
                      int turn_index) {
    Argument c;
    c.id = ArgumentId{"a" + std::to_string(number)};
    c.act = dialogue::Act::critique;
    c.agent = author_side.agent;
    c.quality = author_side.quality;
    c.content = c.agent + " objects to " + objected.id.str() + " competing with " + author_side.id.str() +
                " over " + phrase;
    c.rationale = "cross-session overlap between " + author_side.source.session_id + " and " +
                  objected.source.session_id;
    c.source = {"arbitration", 1, turn_index};
    return c;
}

}  // namespace

ArbitrationResult cross_pair_arbitration(const std::map<std::string, std::vector<Argument>>& accepted_per_session,
                                         const providers::SimilarityProvider& overlap_detector, double tau,
                                         std::span<const Argument> existing) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw ConfigError("arbitration tau must lie in [0,1]");
    ArbitrationResult out;
    std::size_t next = highest_numeric_id(existing) + 1;
    int turn = 1;
    std::set<std::pair<ArgumentId, ArgumentId>> seen;

    for (auto s = accepted_per_session.begin(); s != accepted_per_session.end(); ++s) {
        for (auto t = std::next(s); t != accepted_per_session.end(); ++t) {
            for (const auto& x : s->second) {
                for (const auto& y : t->second) {
                    if (x.source.session_id == y.source.session_id || x.id == y.id) continue;
                    const double sim = overlap_detector.similarity(x.content, y.content);
                    if (sim < tau) continue;
                    if (!seen.insert({std::min(x.id, y.id), std::max(x.id, y.id)}).second) continue;
                    const std::string phrase = shared_phrase(x.content, y.content);
                    Argument cx = critique_for(x, y, phrase, next++, turn++);
                    Argument cy = critique_for(y, x, phrase, next++, turn++);
                    out.edges.push_back({x.id, y.id, Origin::arbitration, 1.0, cx.content, cx.id});
                    out.edges.push_back({y.id, x.id, Origin::arbitration, 1.0, cy.content, cy.id});
                    out.overlaps.push_back({x.id, y.id, x.source.session_id, y.source.session_id, sim});
                    out.critiques.push_back(std::move(cx));
                    out.critiques.push_back(std::move(cy));
                }
            }
        }
    }
    return out;
}

}  // namespace argneg::attacks
