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

#include <algorithm>

#include "argneg/af/kernels.hpp"
#include "argneg/common/errors.hpp"
#include "labelling.hpp"

namespace argneg::af::kernels {

BitFramework BitFramework::from(const Framework& af) {
    if (af.size() > 64) {
        throw InputError("preferred semantics supports at most 64 arguments, got " + std::to_string(af.size()));
    }
    BitFramework bf;
    bf.n = af.size();
    bf.attackers.assign(bf.n, 0);
    bf.targets.assign(bf.n, 0);
    for (auto [a, b] : af.attack_pairs()) {
        bf.targets[a] |= bit(b);
        bf.attackers[b] |= bit(a);
        if (a == b) bf.self_attacking |= bit(a);
    }
    return bf;
}

namespace detail {

std::vector<Mask> keep_maximal(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> out;
    for (Mask m : masks) {
        bool strictly_inside = false;
        for (Mask other : masks) {
            if (other != m && (m & ~other) == 0) {
                strictly_inside = true;
                break;
            }
        }
        if (!strictly_inside) out.push_back(m);
    }
    return out;
}

}  // namespace detail

std::vector<Mask> preferred_serial(const BitFramework& bf) {
    detail::Labelling lab = detail::initial(bf);
    detail::Search search(bf);
    if (detail::propagate(bf, lab)) {
        search.run(lab);
    }
    auto result = detail::keep_maximal(std::move(search.found()));
    // The empty set is always admissible.
    if (result.empty()) result.push_back(0);
    return result;
}

Extension to_extension(const Framework& af, Mask members, Semantics s) {
    Extension e;
    e.semantics = s;
    for (std::size_t i = 0; i < af.size(); ++i) {
        if (members & bit(i)) e.members.push_back(af.id(i));
    }
    canonicalize(e.members);
    return e;
}

}  // namespace argneg::af::kernels
