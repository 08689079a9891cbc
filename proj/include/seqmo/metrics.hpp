#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "seqmo/nondominated.hpp"
#include "seqmo/objective.hpp"

namespace seqmo {

struct HvConfig {
    ObjectiveVector reference_point{1.0, 1.0};
    // per-objective (lower, upper) used by normalize_front
    std::vector<std::pair<double, double>> normalization_bounds{{0.0, 1.0}, {0.0, 1.0}};
};

// Exact bi-objective hypervolume: area dominated by the front and bounded by
// the reference point. Points that do not strictly dominate the reference and
// points dominated within the front contribute nothing.
inline double hypervolume_2d(const std::vector<ObjectiveVector>& front,
                             const ObjectiveVector& ref) {
    if (ref.size() != 2) throw std::invalid_argument("hypervolume_2d: reference must be 2-d");
    std::vector<ObjectiveVector> pts;
    for (const auto& p : front) {
        if (p.size() != 2) throw std::invalid_argument("hypervolume_2d: only K=2 supported");
        if (p[0] < ref[0] && p[1] < ref[1]) pts.push_back(p);
    }
    if (pts.empty()) return 0.0;

    // sweep ascending in f1; keep only the staircase (strictly descending f2)
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    double area = 0.0;
    double best_f2 = ref[1];
    std::vector<ObjectiveVector> stairs;
    for (const auto& p : pts) {
        if (p[1] >= best_f2) continue;  // dominated by an earlier point
        stairs.push_back(p);
        best_f2 = p[1];
    }
    for (std::size_t i = 0; i < stairs.size(); ++i) {
        const double next_f1 = (i + 1 < stairs.size()) ? stairs[i + 1][0] : ref[0];
        area += (next_f1 - stairs[i][0]) * (ref[1] - stairs[i][1]);
    }
    return area;
}

// Affine map of each objective onto [0,1] given (lower, upper) bounds.
// Values are not clamped; points beyond the bounds simply fail the
// reference-dominance filter later.
inline std::vector<ObjectiveVector> normalize_front(
    const std::vector<ObjectiveVector>& front,
    const std::vector<std::pair<double, double>>& bounds) {
    for (const auto& [lo, hi] : bounds)
        if (!(hi > lo)) throw std::invalid_argument("normalize_front: degenerate bounds");
    std::vector<ObjectiveVector> out;
    out.reserve(front.size());
    for (const auto& p : front) {
        if (p.size() != bounds.size())
            throw std::invalid_argument("normalize_front: dimension mismatch");
        ObjectiveVector q(p.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            q[k] = (p[k] - bounds[k].first) / (bounds[k].second - bounds[k].first);
        out.push_back(std::move(q));
    }
    return out;
}

// Per-training-iteration counts of population slots replaced by predicted
// solutions.
class UpdateTrace {
public:
    void record(std::size_t iteration, bool accepted) {
        if (!counts_.empty() && iteration + 1 < counts_.size())
            throw std::invalid_argument("UpdateTrace::record: iteration went backwards");
        if (iteration >= counts_.size()) counts_.resize(iteration + 1, 0);
        if (accepted) ++counts_[iteration];
    }

    const std::vector<long>& counts() const { return counts_; }
    bool empty() const { return counts_.empty(); }

    long total() const {
        long t = 0;
        for (long c : counts_) t += c;
        return t;
    }

private:
    std::vector<long> counts_;
};

}  // namespace seqmo
