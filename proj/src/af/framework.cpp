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

#include "argneg/af/framework.hpp"

#include <algorithm>

#include "argneg/common/errors.hpp"

namespace argneg::af {

std::string_view to_string(Semantics s) noexcept {
    return s == Semantics::grounded ? "grounded" : "preferred";
}

Semantics parse_semantics(std::string_view s) {
    if (s == "grounded") return Semantics::grounded;
    if (s == "preferred") return Semantics::preferred;
    throw InputError("unknown semantics '" + std::string(s) + "' (expected grounded|preferred)");
}

Framework::Framework(std::vector<ArgumentId> arguments, std::span<const Attack> attacks)
    : args_(std::move(arguments)) {
    index_.reserve(args_.size());
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (args_[i].empty()) {
            throw InputError("argument id must be non-empty");
        }
        if (!index_.emplace(args_[i], i).second) {
            throw InputError("duplicate argument id '" + args_[i].str() + "'");
        }
    }
    attacks_.reserve(attacks.size());
    for (const auto& att : attacks) {
        attacks_.emplace_back(index_of(att.attacker), index_of(att.target));
    }
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

    attackers_.assign(args_.size(), {});
    targets_.assign(args_.size(), {});
    for (auto [a, b] : attacks_) {
        targets_[a].push_back(b);
        attackers_[b].push_back(a);
    }
    for (auto& v : attackers_) std::sort(v.begin(), v.end());
}

std::vector<Attack> Framework::attacks() const {
    std::vector<Attack> out;
    out.reserve(attacks_.size());
    for (auto [a, b] : attacks_) out.push_back({args_[a], args_[b]});
    return out;
}

std::optional<std::size_t> Framework::find(const ArgumentId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Framework::index_of(const ArgumentId& id) const {
    auto idx = find(id);
    if (!idx) {
        throw InputError("unknown argument id '" + id.str() + "'");
    }
    return *idx;
}

std::vector<std::size_t> Framework::indices_of(std::span<const ArgumentId> ids) const {
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(index_of(id));
    return out;
}

bool Framework::attacks(std::size_t attacker, std::size_t target) const {
    const auto& t = targets_.at(attacker);
    return std::binary_search(t.begin(), t.end(), target);
}

bool Framework::has_attack(const ArgumentId& attacker, const ArgumentId& target) const {
    auto a = find(attacker);
    auto b = find(target);
    return a && b && attacks(*a, *b);
}

ArgumentIds Framework::ids_where(const std::vector<bool>& mask) const {
    ArgumentIds out;
    for (std::size_t i = 0; i < args_.size() && i < mask.size(); ++i) {
        if (mask[i]) out.push_back(args_[i]);
    }
    canonicalize(out);
    return out;
}

bool Extension::contains(const ArgumentId& id) const {
    return std::binary_search(members.begin(), members.end(), id);
}

void canonicalize(ArgumentIds& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

void canonicalize(std::vector<Extension>& extensions) {
    for (auto& e : extensions) canonicalize(e.members);
    std::sort(extensions.begin(), extensions.end(),
              [](const Extension& a, const Extension& b) { return a.members < b.members; });
}

}  // namespace argneg::af
