#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "seqmo/matrix.hpp"

namespace seqmo {

// Exact minimum-cost assignment on a square cost matrix, O(n^3) shortest
// augmenting paths with dual potentials. Returns, for each row, the column
// it is assigned to.
inline std::vector<std::size_t> min_cost_assignment(const Matrix& cost) {
    if (!cost.is_square()) throw std::invalid_argument("min_cost_assignment: matrix must be square");
    const std::size_t n = cost.rows();
    if (n == 0) throw std::invalid_argument("min_cost_assignment: empty matrix");

    const double inf = std::numeric_limits<double>::infinity();
    // 1-based working arrays; p[j] = row matched to column j, column 0 is virtual
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
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
    for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace seqmo
