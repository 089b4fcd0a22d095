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

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "argneg/af/framework.hpp"
#include "argneg/dialogue/argument.hpp"

namespace argneg::providers {

struct ConflictVerdict {
    bool is_conflict = false;
    double confidence = 0.0;
    std::string rationale;
    // false: the first argument invalidates the second, but not vice versa.
    bool symmetric = true;
};

struct ClassifierContext {
    std::string project;
    std::uint64_t seed = 0;
};

// Decides whether realizing one argument renders the other infeasible.
// Implementations must tolerate concurrent calls; they may throw on failure.
class ConflictClassifier {
public:
    virtual ~ConflictClassifier() = default;
    virtual ConflictVerdict classify(const dialogue::Argument& a, const dialogue::Argument& b,
                                     const ClassifierContext& ctx) const = 0;
};

class ConstantConfidenceClassifier final : public ConflictClassifier {
public:
    explicit ConstantConfidenceClassifier(double confidence, bool symmetric = true)
        : confidence_(confidence), symmetric_(symmetric) {}
    ConflictVerdict classify(const dialogue::Argument& a, const dialogue::Argument& b,
                             const ClassifierContext& ctx) const override;

private:
    double confidence_;
    bool symmetric_;
};

// Flags every pair with a confidence drawn uniformly from [low, high] by
// hashing (seed, unordered pair of ids). With high < 0.85 it never clears the
// default gate.
class SeededConfidenceClassifier final : public ConflictClassifier {
public:
    SeededConfidenceClassifier(std::uint64_t seed, double low, double high) : seed_(seed), low_(low), high_(high) {}
    ConflictVerdict classify(const dialogue::Argument& a, const dialogue::Argument& b,
                             const ClassifierContext& ctx) const override;

private:
    std::uint64_t seed_;
    double low_;
    double high_;
};

// Verdicts per unordered id pair; unknown pairs are not conflicts. An
// asymmetric entry keeps the direction it was registered with.
class TableClassifier final : public ConflictClassifier {
public:
    void set(const af::ArgumentId& a, const af::ArgumentId& b, ConflictVerdict verdict);
    ConflictVerdict classify(const dialogue::Argument& a, const dialogue::Argument& b,
                             const ClassifierContext& ctx) const override;

    // [{"a": "a1", "b": "a4", "confidence": 0.9, "symmetric": true, "rationale": "..."}]
    static TableClassifier load(const std::string& path);
    static TableClassifier from_json(const nlohmann::json& entries);

private:
    std::map<std::pair<af::ArgumentId, af::ArgumentId>, ConflictVerdict> table_;
};

}  // namespace argneg::providers
