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

#include <omp.h>

#include <deque>

#include "argneg/af/kernels.hpp"
#include "labelling.hpp"

namespace argneg::af::kernels {

std::vector<Mask> preferred_parallel(const BitFramework& bf, std::size_t min_tasks) {
    using detail::Labelling;

    if (min_tasks == 0) {
        min_tasks = 4 * static_cast<std::size_t>(omp_get_max_threads());
    }

    std::vector<Mask> leaves;
    std::deque<Labelling> frontier;
    Labelling root = detail::initial(bf);
    if (detail::propagate(bf, root)) frontier.push_back(root);

    // Breadth-first split; closed states on the way are recorded directly.
    while (!frontier.empty() && frontier.size() < min_tasks) {
        Labelling lab = frontier.front();
        frontier.pop_front();
        if (lab.blank == 0) {
            if (lab.must_out == 0) leaves.push_back(lab.in);
            continue;
        }
        const std::size_t y = detail::select_branch(bf, lab);
        Labelling take = lab;
        detail::label_in(bf, take, y);
        if (detail::propagate(bf, take)) frontier.push_back(take);
        Labelling skip = lab;
        skip.blank &= ~bit(y);
        skip.undec |= bit(y);
        if (!detail::dead(bf, skip)) frontier.push_back(skip);
    }

    const std::vector<Labelling> tasks(frontier.begin(), frontier.end());
    std::vector<std::vector<Mask>> partial(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) default(none) shared(bf, tasks, partial)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        detail::Search search(bf);
        search.run(tasks[t]);
        partial[t] = std::move(search.found());
    }

    for (auto& p : partial) leaves.insert(leaves.end(), p.begin(), p.end());
    auto result = detail::keep_maximal(std::move(leaves));
    if (result.empty()) result.push_back(0);
    return result;
}

}  // namespace argneg::af::kernels
