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

#include <bit>
#include <vector>

#include "argneg/af/kernels.hpp"

// Labelling search shared by the serial and OpenMP preferred kernels.
//
// Labels: IN (accepted so far), OUT (attacked by IN), MUST_OUT (attacks IN but
// not yet attacked by IN), UNDEC (decided not IN), BLANK (open).
namespace argneg::af::kernels::detail {

struct Labelling {
    Mask in = 0;
    Mask out = 0;
    Mask must_out = 0;
    Mask undec = 0;
    Mask blank = 0;
};

inline Mask all_bits(std::size_t n) noexcept { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

inline void label_in(const BitFramework& bf, Labelling& lab, std::size_t y) {
    const Mask b = bit(y);
    lab.in |= b;
    lab.blank &= ~b;
    const Mask beaten = bf.targets[y];
    lab.out |= beaten;
    lab.blank &= ~beaten;
    lab.undec &= ~beaten;
    lab.must_out &= ~beaten;
    const Mask threats = bf.attackers[y] & ~lab.out;
    lab.must_out |= threats;
    lab.blank &= ~threats;
    lab.undec &= ~threats;
}

// A MUST_OUT argument with no BLANK attacker can never be beaten.
inline bool dead(const BitFramework& bf, const Labelling& lab) {
    for (Mask m = lab.must_out; m != 0; m &= m - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(m));
        if ((bf.attackers[x] & lab.blank) == 0) return true;
    }
    return false;
}

// Labels IN every BLANK argument whose attackers are all OUT; any maximal
// admissible set consistent with `lab` contains them. Returns false if the
// branch is dead.
inline bool propagate(const BitFramework& bf, Labelling& lab) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Mask m = lab.blank; m != 0; m &= m - 1) {
            const auto y = static_cast<std::size_t>(std::countr_zero(m));
            if ((lab.blank & bit(y)) && (bf.attackers[y] & ~lab.out) == 0) {
                label_in(bf, lab, y);
                changed = true;
            }
        }
    }
    return !dead(bf, lab);
}

inline Labelling initial(const BitFramework& bf) {
    Labelling lab;
    lab.blank = all_bits(bf.n) & ~bf.self_attacking;
    lab.undec = bf.self_attacking;
    return lab;
}

// Prefer arguments that beat a MUST_OUT, then the widest reach; lowest index on ties.
inline std::size_t select_branch(const BitFramework& bf, const Labelling& lab) {
    std::size_t best = 64;
    int best_score = -1;
    for (Mask m = lab.blank; m != 0; m &= m - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(m));
        int score = std::popcount(bf.targets[y] & ~lab.out);
        if (bf.targets[y] & lab.must_out) score += 128;
        if (score > best_score) {
            best_score = score;
            best = y;
        }
    }
    return best;
}

inline bool covered(const std::vector<Mask>& found, Mask reach) {
    for (Mask e : found) {
        if ((reach & ~e) == 0) return true;
    }
    return false;
}

class Search {
public:
    explicit Search(const BitFramework& bf) : bf_(bf) {}

    void run(Labelling lab) {
        if (covered(found_, lab.in | lab.blank)) return;
        if (lab.blank == 0) {
            if (lab.must_out == 0) found_.push_back(lab.in);
            return;
        }
        const std::size_t y = select_branch(bf_, lab);

        Labelling take = lab;
        label_in(bf_, take, y);
        if (propagate(bf_, take)) run(take);

        Labelling skip = lab;
        skip.blank &= ~bit(y);
        skip.undec |= bit(y);
        if (!dead(bf_, skip)) run(skip);
    }

    std::vector<Mask>& found() { return found_; }

private:
    const BitFramework& bf_;
    std::vector<Mask> found_;
};

// Keeps only subset-maximal masks, deduplicated and sorted.
std::vector<Mask> keep_maximal(std::vector<Mask> masks);

}  // namespace argneg::af::kernels::detail
