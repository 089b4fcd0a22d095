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

#include "argneg/providers/classifier.hpp"

#include <fstream>

#include "argneg/common/errors.hpp"
#include "argneg/common/text.hpp"

namespace argneg::providers {

ConflictVerdict ConstantConfidenceClassifier::classify(const dialogue::Argument&, const dialogue::Argument&,
                                                       const ClassifierContext&) const {
    return {true, confidence_, "constant-confidence stub", symmetric_};
}

ConflictVerdict SeededConfidenceClassifier::classify(const dialogue::Argument& a, const dialogue::Argument& b,
                                                     const ClassifierContext&) const {
    const auto& lo_id = std::min(a.id, b.id);
    const auto& hi_id = std::max(a.id, b.id);
    const std::uint64_t h = text::fnv1a(lo_id.str() + "|" + hi_id.str(), seed_);
    const double u = static_cast<double>(h >> 11) / static_cast<double>(std::uint64_t{1} << 53);
    return {true, low_ + (high_ - low_) * u, "seeded stub verdict", true};
}

void TableClassifier::set(const af::ArgumentId& a, const af::ArgumentId& b, ConflictVerdict verdict) {
    table_[{a, b}] = std::move(verdict);
}

ConflictVerdict TableClassifier::classify(const dialogue::Argument& a, const dialogue::Argument& b,
                                          const ClassifierContext&) const {
    if (auto it = table_.find({a.id, b.id}); it != table_.end()) return it->second;
    if (auto it = table_.find({b.id, a.id}); it != table_.end()) {
        ConflictVerdict v = it->second;
        // Registered as b -> a; an asymmetric verdict cannot be flipped.
        if (!v.symmetric) {
            throw ProviderError("asymmetric verdict registered as " + b.id.str() + " -> " + a.id.str() +
                                "; query the pair in that order");
        }
        return v;
    }
    return {false, 0.0, "no verdict recorded", true};
}

TableClassifier TableClassifier::from_json(const nlohmann::json& entries) {
    if (!entries.is_array()) throw InputError("classifier table must be an array");
    TableClassifier t;
    for (const auto& e : entries) {
        ConflictVerdict v;
        v.is_conflict = e.value("is_conflict", true);
        v.confidence = e.at("confidence").get<double>();
        v.symmetric = e.value("symmetric", true);
        v.rationale = e.value("rationale", std::string{});
        t.set(af::ArgumentId{e.at("a").get<std::string>()}, af::ArgumentId{e.at("b").get<std::string>()}, std::move(v));
    }
    return t;
}

TableClassifier TableClassifier::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open classifier table '" + path + "'");
    try {
        return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad classifier table '" + path + "': " + e.what());
    }
}

}  // namespace argneg::providers
