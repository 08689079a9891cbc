#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "seqmo/hungarian.hpp"
#include "seqmo/matrix.hpp"
#include "seqmo/nondominated.hpp"
#include "seqmo/population.hpp"

namespace seqmo {

// One supervised training example: a poor permutation mapped onto the elite
// permutation whose objective direction it matches.
struct TrainingPair {
    Permutation data;   // from C_poor
    Permutation label;  // from C_elite
    double angle;       // radians, in [0, pi]
    std::size_t poor_index;   // position within C_poor
    std::size_t elite_index;  // position within C_elite
};

struct PairSet {
    std::vector<TrainingPair> pairs;

    double total_angle() const {
        double t = 0.0;
        for (const auto& p : pairs) t += p.angle;
        return t;
    }
};

enum class PairingMode { Greedy, Hungarian };

struct OffspringSplit {
    std::vector<Individual> poor;
    std::vector<Individual> elite;
    // positions of each poor/elite member within the offspring list they came from
    std::vector<std::size_t> poor_indices;
    std::vector<std::size_t> elite_indices;
};

// Rank offspring by non-dominated sorting and keep the best ceil(|C|/2) as
// elite; the boundary front is split by crowding distance, largest first.
inline OffspringSplit divide_offspring(const std::vector<Individual>& offspring) {
    if (offspring.size() < 2)
        throw std::invalid_argument("divide_offspring: need at least 2 offspring");

    std::vector<ObjectiveVector> points;
    points.reserve(offspring.size());
    for (const auto& c : offspring) points.push_back(c.objectives);
    const FrontPartition partition = fast_nondominated_sort(points);

    const std::size_t target = (offspring.size() + 1) / 2;
    std::vector<char> is_elite(offspring.size(), 0);
    std::size_t elite_count = 0;

    for (const auto& front : partition.fronts) {
        if (elite_count >= target) break;
        if (elite_count + front.size() <= target) {
            for (std::size_t i : front) is_elite[i] = 1;
            elite_count += front.size();
            continue;
        }
        // boundary front: take the most spread-out members
        std::vector<ObjectiveVector> front_points;
        front_points.reserve(front.size());
        for (std::size_t i : front) front_points.push_back(points[i]);
        const std::vector<double> crowd = crowding_distance(front_points);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (crowd[a] != crowd[b]) return crowd[a] > crowd[b];
            return front[a] < front[b];
        });
        for (std::size_t r = 0; r < target - elite_count; ++r) is_elite[front[order[r]]] = 1;
        elite_count = target;
        break;
    }

    OffspringSplit split;
    for (std::size_t i = 0; i < offspring.size(); ++i) {
        if (is_elite[i]) {
            split.elite.push_back(offspring[i]);
            split.elite_indices.push_back(i);
        } else {
            split.poor.push_back(offspring[i]);
            split.poor_indices.push_back(i);
        }
    }
    return split;
}

// Angle between two objective vectors: the arccos of the cosine similarity,
// evaluated through the half-angle form 2*atan2(|u'-v'|, |u'+v'|) on the
// normalized vectors. Equivalent to clamped arccos but keeps full accuracy
// near 0 and pi, so collinear vectors report an exact zero.
inline double objective_angle(const ObjectiveVector& u, const ObjectiveVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("objective_angle: dimension mismatch");
    double nu = 0.0, nv = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        nu += u[k] * u[k];
        nv += v[k] * v[k];
    }
    if (nu == 0.0 || nv == 0.0)
        throw std::domain_error("objective_angle: zero-norm objective vector");
    const double su = std::sqrt(nu), sv = std::sqrt(nv);
    double diff_sq = 0.0, sum_sq = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double a = u[k] / su, b = v[k] / sv;
        diff_sq += (a - b) * (a - b);
        sum_sq += (a + b) * (a + b);
    }
    return 2.0 * std::atan2(std::sqrt(diff_sq), std::sqrt(sum_sq));
}

// Pairwise angles between poor and elite objective vectors, computed on
// ideal-shifted objectives f - z* + eps where z* is the componentwise
// minimum over both sets. Raw objectives of these problems are all-positive
// and clustered; anchoring at the joint ideal point spreads the directions.
inline Matrix angle_matrix(const std::vector<Individual>& poor,
                           const std::vector<Individual>& elite) {
    if (poor.empty() || elite.empty())
        throw std::invalid_argument("angle_matrix: empty solution set");
    constexpr double kShiftEps = 1e-12;
    const std::size_t dim = poor.front().objectives.size();

    ObjectiveVector ideal(dim, std::numeric_limits<double>::infinity());
    for (const auto* group : {&poor, &elite})
        for (const auto& ind : *group)
            for (std::size_t k = 0; k < dim; ++k)
                ideal[k] = std::min(ideal[k], ind.objectives[k]);

    auto shifted = [&](const ObjectiveVector& f) {
        ObjectiveVector s(dim);
        for (std::size_t k = 0; k < dim; ++k) s[k] = f[k] - ideal[k] + kShiftEps;
        return s;
    };

    std::vector<ObjectiveVector> sp, se;
    sp.reserve(poor.size());
    se.reserve(elite.size());
    for (const auto& p : poor) sp.push_back(shifted(p.objectives));
    for (const auto& e : elite) se.push_back(shifted(e.objectives));

    Matrix angles(poor.size(), elite.size());
    for (std::size_t i = 0; i < poor.size(); ++i)
        for (std::size_t j = 0; j < elite.size(); ++j)
            angles(i, j) = objective_angle(sp[i], se[j]);
    return angles;
}

// Each poor solution independently takes the elite with the smallest angle;
// elites may repeat. Ties go to the lowest elite index.
inline PairSet greedy_match(const std::vector<Individual>& poor,
                            const std::vector<Individual>& elite,
                            const Matrix& angles) {
    if (poor.empty() || elite.empty())
        throw std::invalid_argument("greedy_match: empty solution set");
    PairSet out;
    out.pairs.reserve(poor.size());
    for (std::size_t i = 0; i < poor.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < elite.size(); ++j)
            if (angles(i, j) < angles(i, best)) best = j;
        out.pairs.push_back({poor[i].genotype, elite[best].genotype, angles(i, best), i, best});
    }
    return out;
}

// One-to-one matching minimizing the total angle. Rectangular inputs are
// padded to square with a cost strictly above pi * max-dimension, so dummy
// matches can never displace real ones; dummy pairs are dropped.
inline PairSet hungarian_match(const std::vector<Individual>& poor,
                               const std::vector<Individual>& elite,
                               const Matrix& angles) {
    if (poor.empty() || elite.empty())
        throw std::invalid_argument("hungarian_match: empty solution set");
    const std::size_t rows = poor.size(), cols = elite.size();
    const std::size_t side = std::max(rows, cols);
    const double pad = std::numbers::pi * static_cast<double>(side) + 1.0;

    Matrix cost(side, side, pad);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) cost(i, j) = angles(i, j);

    const std::vector<std::size_t> assignment = min_cost_assignment(cost);
    PairSet out;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t j = assignment[i];
        if (j >= cols) continue;  // matched to a dummy column
        out.pairs.push_back({poor[i].genotype, elite[j].genotype, angles(i, j), i, j});
    }
    return out;
}

struct TrainingSet {
    OffspringSplit split;
    Matrix angles;  // |poor| x |elite|, diagnostics and snapshot emission
    PairSet pairs;
};

// Divide offspring into poor/elite halves and build data-label pairs with
// the chosen matcher.
inline TrainingSet build_training_set(const std::vector<Individual>& offspring, PairingMode mode) {
    TrainingSet out;
    out.split = divide_offspring(offspring);
    out.angles = angle_matrix(out.split.poor, out.split.elite);
    out.pairs = (mode == PairingMode::Greedy)
                    ? greedy_match(out.split.poor, out.split.elite, out.angles)
                    : hungarian_match(out.split.poor, out.split.elite, out.angles);
    return out;
}

}  // namespace seqmo
