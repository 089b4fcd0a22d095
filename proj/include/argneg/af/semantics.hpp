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
#include <span>
#include <vector>

#include "argneg/af/framework.hpp"

namespace argneg::af {

// Bitset-backed preferred enumeration handles frameworks up to this size.
inline constexpr std::size_t kMaxPreferredArguments = 64;

// No pair (a, b) of members with a attacking b; a self-attacking member is a conflict.
bool is_conflict_free(std::span<const ArgumentId> set, const Framework& af);

// Every attacker of `a` is attacked by some member of `set`.
bool defends(std::span<const ArgumentId> set, const ArgumentId& a, const Framework& af);

bool is_admissible(std::span<const ArgumentId> set, const Framework& af);

// Least fixed point of the characteristic function, iterated from the empty set.
Extension grounded_extension(const Framework& af);

/// All subset-maximal admissible sets in canonical order. Never empty: when
/// nothing else is admissible the result is the single empty extension.
/// Uses the OpenMP search kernel; results are identical to the serial kernel.
std::vector<Extension> preferred_extensions(const Framework& af);
std::vector<Extension> preferred_extensions_serial(const Framework& af);

struct AcceptanceStatus {
    bool skeptically_accepted = false;
    bool credulously_accepted = false;
    bool in_grounded = false;

    bool operator==(const AcceptanceStatus&) const = default;
};

AcceptanceStatus acceptance_status(const ArgumentId& a, const Framework& af);
AcceptanceStatus acceptance_status(const ArgumentId& a, const Framework& af, const Extension& grounded,
                                   std::span<const Extension> preferred);

}  // namespace argneg::af
