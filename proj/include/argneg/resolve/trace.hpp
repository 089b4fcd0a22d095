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

#pragma once

#include <string>
#include <vector>

#include "argneg/resolve/resolver.hpp"

namespace argneg::resolve {

struct TraceStep {
    ArgumentId from;
    ArgumentId to;
    std::string label;  // p2, p3 or gap
    std::string note;
};

struct TraceCard {
    std::string requirement;
    ArgumentId argument;
    std::string act;
    std::string agent;
    std::string session;
    int round = 0;
    std::string quality;
    std::vector<std::string> accepted_under;
    std::vector<TraceStep> backward;
    std::vector<DefenseStep> defense;
    std::vector<std::string> dimensions;
    bool complete = true;
    std::vector<std::string> gaps;
};

// Throws DomainError unless `argument` contributes to R_acc.
TraceCard trace_card(const ArgumentId& argument, const Resolution& resolution, const AttackGraph& graph);
std::vector<TraceCard> trace_cards(const Resolution& resolution, const AttackGraph& graph);

nlohmann::json to_json(const TraceCard& card);
nlohmann::json to_json(const DefenseStep& step);
std::string render_markdown(const std::vector<TraceCard>& cards);

}  // namespace argneg::resolve
