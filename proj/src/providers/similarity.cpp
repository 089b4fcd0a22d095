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

#include "argneg/providers/similarity.hpp"

#include <cmath>

#include "argneg/common/text.hpp"

namespace argneg::providers {

double TokenCosineSimilarity::similarity(std::string_view a, std::string_view b) const {
    const auto ba = text::word_bag(a);
    const auto bb = text::word_bag(b);
    if (ba.empty() || bb.empty()) return 0.0;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [w, c] : ba) {
        na += static_cast<double>(c) * c;
        if (auto it = bb.find(w); it != bb.end()) dot += static_cast<double>(c) * it->second;
    }
    for (const auto& [w, c] : bb) nb += static_cast<double>(c) * c;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

void TableSimilarity::set(std::string a, std::string b, double value) {
    if (b < a) std::swap(a, b);
    table_[{std::move(a), std::move(b)}] = value;
}

double TableSimilarity::similarity(std::string_view a, std::string_view b) const {
    std::string x(a), y(b);
    if (y < x) std::swap(x, y);
    auto it = table_.find({x, y});
    return it == table_.end() ? fallback_ : it->second;
}

}  // namespace argneg::providers
