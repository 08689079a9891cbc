#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace seqmo {

// K real objective values under the minimization convention.
using ObjectiveVector = std::vector<double>;

// Pareto dominance: a dominates b iff a <= b componentwise with at least
// one strict improvement.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective dimension mismatch");
    if (a.empty())
        throw std::invalid_argument("dominates: empty objective vectors");
    bool strictly_better = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strictly_better = true;
    }
    return strictly_better;
}

inline bool all_finite(const ObjectiveVector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace seqmo
