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

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace argneg::providers {

// Pairwise text similarity in [0,1]. Implementations must be safe for concurrent calls.
class SimilarityProvider {
public:
    virtual ~SimilarityProvider() = default;
    virtual double similarity(std::string_view a, std::string_view b) const = 0;
};

// Cosine over lowercased word bags; the deterministic default scorer.
class TokenCosineSimilarity final : public SimilarityProvider {
public:
    double similarity(std::string_view a, std::string_view b) const override;
};

class ConstantSimilarity final : public SimilarityProvider {
public:
    explicit ConstantSimilarity(double value) : value_(value) {}
    double similarity(std::string_view, std::string_view) const override { return value_; }

private:
    double value_;
};

// Looks up an unordered text pair; falls back to `fallback` for unknown pairs.
class TableSimilarity final : public SimilarityProvider {
public:
    explicit TableSimilarity(double fallback = 0.0) : fallback_(fallback) {}
    void set(std::string a, std::string b, double value);
    double similarity(std::string_view a, std::string_view b) const override;

private:
    std::map<std::pair<std::string, std::string>, double> table_;
    double fallback_;
};

}  // namespace argneg::providers
