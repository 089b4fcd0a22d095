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

#include "argneg/af/semantics.hpp"

#include <algorithm>
#include <deque>

#include "argneg/af/kernels.hpp"
#include "argneg/common/errors.hpp"

namespace argneg::af {

namespace kernels {

std::vector<bool> grounded_membership(const Framework& af) {
    const std::size_t n = af.size();
    std::vector<std::size_t> live_attackers(n);
    std::vector<bool> in(n, false), out(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        live_attackers[i] = af.attackers_of(i).size();
        if (live_attackers[i] == 0) queue.push_back(i);
    }
    while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop_front();
        if (in[a] || out[a]) continue;
        in[a] = true;
        for (std::size_t b : af.targets_of(a)) {
            if (out[b]) continue;
            out[b] = true;
            for (std::size_t c : af.targets_of(b)) {
                if (--live_attackers[c] == 0 && !out[c]) queue.push_back(c);
            }
        }
    }
    return in;
}

}  // namespace kernels

bool is_conflict_free(std::span<const ArgumentId> set, const Framework& af) {
    const auto idx = af.indices_of(set);
    for (std::size_t a : idx) {
        for (std::size_t b : idx) {
            if (af.attacks(a, b)) return false;
        }
    }
    return true;
}

bool defends(std::span<const ArgumentId> set, const ArgumentId& a, const Framework& af) {
    const auto idx = af.indices_of(set);
    const std::size_t target = af.index_of(a);
    for (std::size_t attacker : af.attackers_of(target)) {
        const bool countered = std::any_of(idx.begin(), idx.end(), [&](std::size_t s) { return af.attacks(s, attacker); });
        if (!countered) return false;
    }
    return true;
}

bool is_admissible(std::span<const ArgumentId> set, const Framework& af) {
    if (!is_conflict_free(set, af)) return false;
    return std::all_of(set.begin(), set.end(), [&](const ArgumentId& a) { return defends(set, a, af); });
}

Extension grounded_extension(const Framework& af) {
    return Extension{af.ids_where(kernels::grounded_membership(af)), Semantics::grounded};
}

namespace {

std::vector<Extension> to_extensions(const Framework& af, const std::vector<kernels::Mask>& masks) {
    std::vector<Extension> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(kernels::to_extension(af, m, Semantics::preferred));
    canonicalize(out);
    return out;
}

}  // namespace

std::vector<Extension> preferred_extensions(const Framework& af) {
    const auto bf = kernels::BitFramework::from(af);
    return to_extensions(af, kernels::preferred_parallel(bf));
}

std::vector<Extension> preferred_extensions_serial(const Framework& af) {
    const auto bf = kernels::BitFramework::from(af);
    return to_extensions(af, kernels::preferred_serial(bf));
}

AcceptanceStatus acceptance_status(const ArgumentId& a, const Framework& af) {
    af.index_of(a);
    const auto grounded = grounded_extension(af);
    const auto preferred = preferred_extensions(af);
    return acceptance_status(a, af, grounded, preferred);
}

AcceptanceStatus acceptance_status(const ArgumentId& a, const Framework& af, const Extension& grounded,
                                   std::span<const Extension> preferred) {
    af.index_of(a);
    AcceptanceStatus st;
    st.in_grounded = grounded.contains(a);
    st.skeptically_accepted = !preferred.empty() &&
                              std::all_of(preferred.begin(), preferred.end(), [&](const Extension& e) { return e.contains(a); });
    st.credulously_accepted =
        std::any_of(preferred.begin(), preferred.end(), [&](const Extension& e) { return e.contains(a); });
    return st;
}

}  // namespace argneg::af
