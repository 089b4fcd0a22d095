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

#include "argneg/providers/entailment.hpp"

#include <set>

#include "argneg/common/text.hpp"

namespace argneg::providers {

EntailmentVerdict TokenCoverageEntailment::entails(std::string_view clause,
                                                   std::span<const std::string> requirements) const {
    const auto clause_tokens = text::tokenize(clause);
    const std::set<std::string> wanted(clause_tokens.begin(), clause_tokens.end());
    if (wanted.empty()) return {false, std::nullopt, "clause has no tokens"};
    for (std::size_t i = 0; i < requirements.size(); ++i) {
        const auto toks = text::tokenize(requirements[i]);
        const std::set<std::string> have(toks.begin(), toks.end());
        std::size_t hit = 0;
        for (const auto& w : wanted) hit += have.count(w);
        const double coverage = static_cast<double>(hit) / static_cast<double>(wanted.size());
        if (coverage >= threshold_) {
            return {true, i, "token coverage " + std::to_string(coverage)};
        }
    }
    return {false, std::nullopt, "no requirement covers the clause"};
}

EntailmentVerdict PredicateEntailment::entails(std::string_view clause, std::span<const std::string> requirements) const {
    for (std::size_t i = 0; i < requirements.size(); ++i) {
        if (predicate_(clause, requirements[i])) return {true, i, "predicate satisfied"};
    }
    return {false, std::nullopt, "predicate not satisfied"};
}

}  // namespace argneg::providers
