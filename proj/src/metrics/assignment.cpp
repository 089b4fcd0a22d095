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

#include "argneg/metrics/assignment.hpp"

#include <algorithm>
#include <limits>

namespace argneg::metrics {

namespace {

// Minimum-cost assignment of every row (n <= m) to a distinct column.
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost, std::size_t n, std::size_t m) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) minv[j] = cur, way[j] = j0;
                if (minv[j] < delta) delta = minv[j], j1 = j;
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) u[p[j]] += delta, v[j] -= delta;
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t j = 1; j <= m; ++j)
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

Assignment max_weight_assignment(const std::vector<std::vector<double>>& scores) {
    Assignment out;
    const std::size_t rows = scores.size();
    const std::size_t cols = rows == 0 ? 0 : scores[0].size();
    if (rows == 0 || cols == 0) return out;
    const bool transposed = rows > cols;
    const std::size_t n = transposed ? cols : rows;
    const std::size_t m = transposed ? rows : cols;
    std::vector<std::vector<double>> cost(n, std::vector<double>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) cost[i][j] = -(transposed ? scores[j][i] : scores[i][j]);
    const auto match = hungarian(cost, n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = transposed ? match[i] : i;
        const auto c = transposed ? i : match[i];
        out.pairs.emplace_back(r, c);
        out.total += scores[r][c];
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace argneg::metrics
