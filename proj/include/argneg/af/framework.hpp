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

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace argneg::af {

// Opaque argument token, unique within one framework.
class ArgumentId {
public:
    ArgumentId() = default;
    explicit ArgumentId(std::string value) : value_(std::move(value)) {}

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    auto operator<=>(const ArgumentId&) const = default;
    bool operator==(const ArgumentId&) const = default;

private:
    std::string value_;
};

inline std::ostream& operator<<(std::ostream& os, const ArgumentId& id) { return os << id.str(); }

inline void to_json(nlohmann::json& j, const ArgumentId& id) { j = id.str(); }
inline void from_json(const nlohmann::json& j, ArgumentId& id) { id = ArgumentId{j.get<std::string>()}; }

using ArgumentIds = std::vector<ArgumentId>;

inline namespace literals {
inline ArgumentId operator""_arg(const char* s, std::size_t n) { return ArgumentId{std::string(s, n)}; }
}  // namespace literals

struct Attack {
    ArgumentId attacker;
    ArgumentId target;

    auto operator<=>(const Attack&) const = default;
    bool operator==(const Attack&) const = default;
};

enum class Semantics { grounded, preferred };

std::string_view to_string(Semantics s) noexcept;
Semantics parse_semantics(std::string_view s);

}  // namespace argneg::af

template <>
struct std::hash<argneg::af::ArgumentId> {
    std::size_t operator()(const argneg::af::ArgumentId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};

namespace argneg::af {

using IndexPair = std::pair<std::size_t, std::size_t>;

// Immutable Dung framework <A, R>. Arguments keep the order they were given in;
// attacks are stored as a deduplicated, sorted set of index pairs.
class Framework {
public:
    Framework() = default;
    Framework(std::vector<ArgumentId> arguments, std::span<const Attack> attacks);

    std::size_t size() const noexcept { return args_.size(); }
    bool empty() const noexcept { return args_.empty(); }

    const std::vector<ArgumentId>& arguments() const noexcept { return args_; }
    const ArgumentId& id(std::size_t i) const { return args_.at(i); }
    const std::vector<IndexPair>& attack_pairs() const noexcept { return attacks_; }
    std::vector<Attack> attacks() const;
    std::size_t attack_count() const noexcept { return attacks_.size(); }

    std::optional<std::size_t> find(const ArgumentId& id) const;
    bool contains(const ArgumentId& id) const { return find(id).has_value(); }
    // Throws InputError for ids outside the framework.
    std::size_t index_of(const ArgumentId& id) const;
    std::vector<std::size_t> indices_of(std::span<const ArgumentId> ids) const;

    const std::vector<std::size_t>& attackers_of(std::size_t i) const { return attackers_.at(i); }
    const std::vector<std::size_t>& targets_of(std::size_t i) const { return targets_.at(i); }
    bool attacks(std::size_t attacker, std::size_t target) const;
    bool has_attack(const ArgumentId& attacker, const ArgumentId& target) const;

    // Sorted ids for the given membership mask.
    ArgumentIds ids_where(const std::vector<bool>& mask) const;

private:
    std::vector<ArgumentId> args_;
    std::unordered_map<ArgumentId, std::size_t> index_;
    std::vector<IndexPair> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<std::vector<std::size_t>> targets_;
};

struct Extension {
    ArgumentIds members;  // sorted
    Semantics semantics = Semantics::grounded;

    bool contains(const ArgumentId& id) const;
    std::size_t size() const noexcept { return members.size(); }
    bool operator==(const Extension&) const = default;
};

void canonicalize(ArgumentIds& ids);
// Sort members within each extension, then the extensions lexicographically.
void canonicalize(std::vector<Extension>& extensions);

}  // namespace argneg::af
