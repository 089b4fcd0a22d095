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

// Subset-enumeration reference semantics over an adjacency matrix. Independent
// of the engine: no labellings, no bitset kernels, no counter propagation.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

struct Graph {
    int n = 0;
    std::vector<std::vector<bool>> att;  // att[a][b]: a attacks b
};

inline bool in(std::uint32_t s, int i) { return (s >> i) & 1u; }

inline bool conflict_free(const Graph& g, std::uint32_t s) {
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (in(s, a) && in(s, b) && g.att[a][b]) return false;
    return true;
}

inline bool acceptable(const Graph& g, std::uint32_t s, int a) {
    for (int b = 0; b < g.n; ++b) {
        if (!g.att[b][a]) continue;
        bool countered = false;
        for (int c = 0; c < g.n; ++c)
            if (in(s, c) && g.att[c][b]) countered = true;
        if (!countered) return false;
    }
    return true;
}

inline bool admissible(const Graph& g, std::uint32_t s) {
    if (!conflict_free(g, s)) return false;
    for (int a = 0; a < g.n; ++a)
        if (in(s, a) && !acceptable(g, s, a)) return false;
    return true;
}

// Least fixed point of F(S) = {a | S defends a}, iterated from the empty set.
inline std::uint32_t grounded(const Graph& g) {
    std::uint32_t s = 0;
    while (true) {
        std::uint32_t next = 0;
        for (int a = 0; a < g.n; ++a)
            if (acceptable(g, s, a)) next |= 1u << a;
        if (next == s) return s;
        s = next;
    }
}

inline std::set<std::uint32_t> preferred(const Graph& g) {
    std::vector<std::uint32_t> adm;
    for (std::uint32_t s = 0; s < (1u << g.n); ++s)
        if (admissible(g, s)) adm.push_back(s);
    std::set<std::uint32_t> out;
    for (auto s : adm) {
        bool maximal = true;
        for (auto t : adm)
            if (t != s && (s & t) == s) maximal = false;
        if (maximal) out.insert(s);
    }
    return out;
}

}  // namespace oracle
