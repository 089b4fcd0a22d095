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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace argneg::providers {

struct EntailmentVerdict {
    bool satisfied = false;
    // First requirement found to satisfy the clause.
    std::optional<std::size_t> satisfying_index;
    std::string rationale;
};

class EntailmentProvider {
public:
    virtual ~EntailmentProvider() = default;
    virtual EntailmentVerdict entails(std::string_view clause, std::span<const std::string> requirements) const = 0;
};

// A requirement satisfies a clause when it covers at least `threshold` of the
// clause's word tokens.
class TokenCoverageEntailment final : public EntailmentProvider {
public:
    explicit TokenCoverageEntailment(double threshold = 0.5) : threshold_(threshold) {}
    EntailmentVerdict entails(std::string_view clause, std::span<const std::string> requirements) const override;

private:
    double threshold_;
};

class PredicateEntailment final : public EntailmentProvider {
public:
    using Predicate = std::function<bool(std::string_view clause, std::string_view requirement)>;
    explicit PredicateEntailment(Predicate p) : predicate_(std::move(p)) {}
    EntailmentVerdict entails(std::string_view clause, std::span<const std::string> requirements) const override;

private:
    Predicate predicate_;
};

}  // namespace argneg::providers
