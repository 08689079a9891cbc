#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "seqmo/evaluator.hpp"
#include "seqmo/genetic.hpp"
#include "seqmo/population.hpp"
#include "seqmo/rng.hpp"

namespace seqmo {

// Uniformly spread weight vectors on the simplex plus per-vector T nearest
// neighborhoods (Euclidean, self included).
class WeightVectorSet {
public:
    WeightVectorSet(std::size_t count, std::size_t dim, std::size_t neighborhood_size) {
        if (count < 2) throw std::invalid_argument("WeightVectorSet: need at least 2 vectors");
        if (dim < 2) throw std::invalid_argument("WeightVectorSet: need at least 2 objectives");
        neighborhood_size = std::min(neighborhood_size, count);

        vectors_.reserve(count);
        if (dim == 2) {
            for (std::size_t i = 0; i < count; ++i) {
                const double w = static_cast<double>(i) / static_cast<double>(count - 1);
                vectors_.push_back({w, 1.0 - w});
            }
        } else {
            // deterministic fallback for K > 2: stratified rows of a simplex
            // lattice, truncated to the requested count
            std::size_t level = 1;
            while (lattice_size(level, dim) < count) ++level;
            generate_lattice(level, dim, count);
        }

        neighborhoods_.resize(count);
        std::vector<std::size_t> order(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const double da = sqdist(vectors_[i], vectors_[a]);
                const double db = sqdist(vectors_[i], vectors_[b]);
                if (da != db) return da < db;
                return a < b;
            });
            neighborhoods_[i].assign(order.begin(),
                                     order.begin() + static_cast<std::ptrdiff_t>(neighborhood_size));
        }
    }

    std::size_t size() const { return vectors_.size(); }
    const std::vector<double>& vector(std::size_t i) const { return vectors_[i]; }
    const std::vector<std::size_t>& neighborhood(std::size_t i) const { return neighborhoods_[i]; }

private:
    static double sqdist(const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = a[k] - b[k];
            s += d * d;
        }
        return s;
    }

    static std::size_t lattice_size(std::size_t level, std::size_t dim) {
        // C(level + dim - 1, dim - 1)
        std::size_t num = 1;
        for (std::size_t i = 1; i < dim; ++i) num = num * (level + i) / i;
        return num;
    }

    void generate_lattice(std::size_t level, std::size_t dim, std::size_t count) {
        level_ = level;
        std::vector<std::size_t> parts(dim, 0);
        recurse_lattice(parts, 0, level, dim, count);
    }

    void recurse_lattice(std::vector<std::size_t>& parts, std::size_t pos, std::size_t remaining,
                         std::size_t dim, std::size_t count) {
        if (vectors_.size() == count) return;
        if (pos + 1 == dim) {
            parts[pos] = remaining;
            std::vector<double> w(dim);
            for (std::size_t k = 0; k < dim; ++k)
                w[k] = static_cast<double>(parts[k]) / static_cast<double>(level_);
            vectors_.push_back(std::move(w));
            return;
        }
        for (std::size_t v = 0; v <= remaining; ++v) {
            parts[pos] = v;
            recurse_lattice(parts, pos + 1, remaining - v, dim, count);
            if (vectors_.size() == count) return;
        }
    }

    std::size_t level_ = 1;
    std::vector<std::vector<double>> vectors_;
    std::vector<std::vector<std::size_t>> neighborhoods_;
};

// Tchebycheff aggregation against the ideal point z.
inline double tchebycheff(const ObjectiveVector& f, const std::vector<double>& w,
                          const ObjectiveVector& z) {
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < f.size(); ++k) g = std::max(g, w[k] * std::abs(f[k] - z[k]));
    return g;
}

struct MoeadParams {
    std::size_t neighborhood_size = 20;
    // cap on neighbor slots one child may replace; unlimited by default, as
    // in the decomposition original where every improving neighbor is taken
    std::size_t max_replacements = std::numeric_limits<std::size_t>::max();
    double mutation_rate = 0.0;  // filled from 2/N at setup when zero
};

struct SubproblemChild {
    Individual individual;
    std::size_t subproblem;  // index of the subproblem whose neighborhood bred it
};

// One batch of offspring, one child per subproblem, parents drawn from the
// subproblem's neighborhood. Replacement is deferred to the update step so a
// training stage can observe the full offspring set first.
inline std::vector<SubproblemChild> moead_make_offspring(const Population& pop,
                                                         const WeightVectorSet& weights,
                                                         const MoeadParams& params,
                                                         CountingEvaluator& eval,
                                                         RngStream& rng) {
    if (pop.size() != weights.size())
        throw std::invalid_argument("moead_make_offspring: |pop| != |weights|");
    std::vector<SubproblemChild> children;
    children.reserve(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const auto& nb = weights.neighborhood(i);
        const std::size_t a = nb[rng.next_below(nb.size())];
        std::size_t b = nb[rng.next_below(nb.size())];
        while (b == a && nb.size() > 1) b = nb[rng.next_below(nb.size())];
        Permutation child = order_crossover(pop[a].genotype, pop[b].genotype, rng);
        child = swap_mutation(child, params.mutation_rate, rng);
        children.push_back({eval.make_individual(std::move(child)), i});
    }
    return children;
}

// Sequential neighborhood replacement for one child: update the ideal point,
// then replace up to max_replacements neighbors whose aggregation the child
// improves (ties accepted, as in the decomposition original). Returns the
// number of slots replaced.
inline std::size_t moead_insert(Population& pop, const WeightVectorSet& weights,
                                ObjectiveVector& z_ideal, const Individual& child,
                                std::size_t subproblem, const MoeadParams& params) {
    for (std::size_t k = 0; k < z_ideal.size(); ++k)
        z_ideal[k] = std::min(z_ideal[k], child.objectives[k]);

    std::size_t replaced = 0;
    for (std::size_t j : weights.neighborhood(subproblem)) {
        if (replaced >= params.max_replacements) break;
        const double g_child = tchebycheff(child.objectives, weights.vector(j), z_ideal);
        const double g_old = tchebycheff(pop[j].objectives, weights.vector(j), z_ideal);
        if (g_child <= g_old) {
            pop[j] = child;
            ++replaced;
        }
    }
    return replaced;
}

// Applies a full offspring batch in subproblem order.
inline std::size_t moead_apply_offspring(Population& pop, const WeightVectorSet& weights,
                                         ObjectiveVector& z_ideal,
                                         const std::vector<SubproblemChild>& children,
                                         const MoeadParams& params) {
    std::size_t replaced = 0;
    for (const auto& c : children)
        replaced += moead_insert(pop, weights, z_ideal, c.individual, c.subproblem, params);
    return replaced;
}

// One full baseline generation; returns the offspring for callers that track
// them.
inline std::vector<SubproblemChild> moead_generation(Population& pop,
                                                     const WeightVectorSet& weights,
                                                     ObjectiveVector& z_ideal,
                                                     const MoeadParams& params,
                                                     CountingEvaluator& eval, RngStream& rng) {
    std::vector<SubproblemChild> children = moead_make_offspring(pop, weights, params, eval, rng);
    moead_apply_offspring(pop, weights, z_ideal, children, params);
    return children;
}

inline ObjectiveVector ideal_point(const Population& pop) {
    if (pop.empty()) throw std::invalid_argument("ideal_point: empty population");
    ObjectiveVector z = pop[0].objectives;
    for (const auto& ind : pop)
        for (std::size_t k = 0; k < z.size(); ++k) z[k] = std::min(z[k], ind.objectives[k]);
    return z;
}

}  // namespace seqmo
