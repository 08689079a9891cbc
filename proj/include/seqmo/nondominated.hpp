#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "seqmo/objective.hpp"

namespace seqmo {

// Ordered fronts of indices into the input set; front 0 is non-dominated.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;

    std::size_t rank_of(std::size_t index) const {
        for (std::size_t r = 0; r < fronts.size(); ++r)
            for (std::size_t i : fronts[r])
                if (i == index) return r;
        throw std::out_of_range("FrontPartition::rank_of: index not present");
    }
};

// Deb's fast non-dominated sort, O(n^2 K).
inline FrontPartition fast_nondominated_sort(const std::vector<ObjectiveVector>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("fast_nondominated_sort: empty input");

    std::vector<std::vector<std::size_t>> dominated_by(n);  // S_p
    std::vector<std::size_t> domination_count(n, 0);        // n_p

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(points[p], points[q])) {
                dominated_by[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(points[q], points[p])) {
                dominated_by[q].push_back(p);
                ++domination_count[p];
            }
        }

    FrontPartition out;
    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p)
        if (domination_count[p] == 0) current.push_back(p);

    while (!current.empty()) {
        out.fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t p : current)
            for (std::size_t q : dominated_by[p])
                if (--domination_count[q] == 0) next.push_back(q);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return out;
}

// Crowding distance within one front. Boundary points per objective get
// +infinity; interior points accumulate normalized neighbor gaps. Ties in an
// objective are ordered by original index, which keeps duplicates finite and
// symmetric when they sit in the interior.
inline std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front) {
    const std::size_t n = front.size();
    if (n == 0) throw std::invalid_argument("crowding_distance: empty front");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    const std::size_t dim = front[0].size();
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < dim; ++k) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (front[a][k] != front[b][k]) return front[a][k] < front[b][k];
            return a < b;
        });
        const double lo = front[idx.front()][k];
        const double hi = front[idx.back()][k];
        dist[idx.front()] = inf;
        dist[idx.back()] = inf;
        if (hi == lo) continue;  // degenerate objective, no spread to measure
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (dist[idx[i]] == inf) continue;
            dist[idx[i]] += (front[idx[i + 1]][k] - front[idx[i - 1]][k]) / (hi - lo);
        }
    }
    return dist;
}

}  // namespace seqmo
