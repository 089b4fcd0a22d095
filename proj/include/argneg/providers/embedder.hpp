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
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace argneg::providers {

class Embedder {
public:
    virtual ~Embedder() = default;
    virtual std::vector<double> embed(std::string_view text) const = 0;
    virtual std::size_t dimension() const = 0;
};

// Word tokens hashed into `dimension` buckets, L2-normalised. Deterministic per seed.
class HashedBagOfWordsEmbedder final : public Embedder {
public:
    explicit HashedBagOfWordsEmbedder(std::size_t dimension = 512, std::uint64_t seed = 0)
        : dimension_(dimension), seed_(seed) {}
    std::vector<double> embed(std::string_view text) const override;
    std::size_t dimension() const override { return dimension_; }

private:
    std::size_t dimension_;
    std::uint64_t seed_;
};

// 0 when either vector is all zeros.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace argneg::providers
