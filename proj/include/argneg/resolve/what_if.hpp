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
#include <string>
#include <vector>

#include "argneg/resolve/resolver.hpp"

namespace argneg::resolve {

struct JournalEntry {
    std::uint64_t sequence = 0;
    std::string timestamp;
    std::string operation;  // remove_attack | inject_argument | solve
    nlohmann::json payload;

    bool operator==(const JournalEntry&) const = default;
};

// Append-only override journal.
class Journal {
public:
    const JournalEntry& append(std::string operation, nlohmann::json payload);
    const std::vector<JournalEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<JournalEntry> entries_;
};

nlohmann::json to_json(const JournalEntry& e);
nlohmann::json to_json(const Journal& j);

struct ExtensionDelta {
    af::ArgumentIds entered;
    af::ArgumentIds left;
};
ExtensionDelta extension_delta(const af::Extension& before, const af::Extension& after);

struct WhatIf {
    AttackGraph graph;
    Resolution resolution;
    ExtensionDelta delta;
};

// Both operations leave `graph` untouched and re-solve the modified copy.
// Unknown edge -> InputError.
WhatIf what_if_remove_attack(const AttackGraph& graph, const af::Attack& edge, const ResolutionConfig& config,
                             Journal* journal = nullptr);
// Id collision or unknown endpoints -> InputError.
WhatIf what_if_inject(const AttackGraph& graph, dialogue::Argument argument, std::vector<attacks::AttackEdge> edges,
                      const ResolutionConfig& config, Journal* journal = nullptr);

}  // namespace argneg::resolve
