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
#include <vector>

#include "argneg/af/framework.hpp"

// Index-level solver kernels. The serial preferred search is the reference the
// OpenMP kernel is tested against.
namespace argneg::af::kernels {

using Mask = std::uint64_t;

inline constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

struct BitFramework {
    std::size_t n = 0;
    std::vector<Mask> attackers;  // attackers[i]: who attacks i
    std::vector<Mask> targets;    // targets[i]: whom i attacks
    Mask self_attacking = 0;

    // Throws InputError when af.size() > kMaxPreferredArguments.
    static BitFramework from(const Framework& af);
};

// Grounded membership by attacker-count propagation, O(|A| + |R|).
std::vector<bool> grounded_membership(const Framework& af);

std::vector<Mask> preferred_serial(const BitFramework& bf);

// Expands the search tree breadth-first until there are at least
// `min_tasks` open subtrees (0 = derived from the thread count), then
// solves the subtrees in parallel.
std::vector<Mask> preferred_parallel(const BitFramework& bf, std::size_t min_tasks = 0);

Extension to_extension(const Framework& af, Mask members, Semantics s);

}  // namespace argneg::af::kernels
