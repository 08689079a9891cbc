#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "seqmo/evaluator.hpp"
#include "seqmo/genetic.hpp"
#include "seqmo/nondominated.hpp"
#include "seqmo/population.hpp"
#include "seqmo/rng.hpp"

namespace seqmo {

struct RankedPopulation {
    std::vector<std::size_t> rank;     // front index per member
    std::vector<double> crowding;      // crowding distance per member
};

inline RankedPopulation rank_population(const std::vector<ObjectiveVector>& points) {
    const FrontPartition fronts = fast_nondominated_sort(points);
    RankedPopulation out;
    out.rank.assign(points.size(), 0);
    out.crowding.assign(points.size(), 0.0);
    for (std::size_t r = 0; r < fronts.fronts.size(); ++r) {
        const auto& front = fronts.fronts[r];
        std::vector<ObjectiveVector> front_points;
        front_points.reserve(front.size());
        for (std::size_t i : front) front_points.push_back(points[i]);
        const std::vector<double> crowd = crowding_distance(front_points);
        for (std::size_t i = 0; i < front.size(); ++i) {
            out.rank[front[i]] = r;
            out.crowding[front[i]] = crowd[i];
        }
    }
    return out;
}

// Binary tournament on (front rank, crowding distance); remaining ties go to
// the lower index.
inline std::size_t binary_tournament(const RankedPopulation& ranked, RngStream& rng) {
    const std::size_t n = ranked.rank.size();
    const std::size_t a = static_cast<std::size_t>(rng.next_below(n));
    const std::size_t b = static_cast<std::size_t>(rng.next_below(n));
    if (ranked.rank[a] != ranked.rank[b]) return ranked.rank[a] < ranked.rank[b] ? a : b;
    if (ranked.crowding[a] != ranked.crowding[b])
        return ranked.crowding[a] > ranked.crowding[b] ? a : b;
    return std::min(a, b);
}

// Elitist (rank, crowding) truncation of an arbitrary pool down to capacity.
// Optionally reports which pool indices survived.
inline Population nsga2_truncate(const std::vector<Individual>& pool, std::size_t capacity,
                                 std::vector<std::size_t>* selected_indices = nullptr) {
    std::vector<ObjectiveVector> points;
    points.reserve(pool.size());
    for (const auto& ind : pool) points.push_back(ind.objectives);
    const FrontPartition fronts = fast_nondominated_sort(points);

    Population next(capacity);
    std::vector<std::size_t> chosen;
    for (const auto& front : fronts.fronts) {
        if (chosen.size() == capacity) break;
        if (chosen.size() + front.size() <= capacity) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            continue;
        }
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
        const std::size_t need = capacity - chosen.size();
        for (std::size_t r = 0; r < need; ++r) chosen.push_back(front[order[r]]);
        break;
    }
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t i : chosen) next.add(pool[i]);
    if (selected_indices) *selected_indices = std::move(chosen);
    return next;
}

struct GeneticParams {
    double mutation_rate;  // per-position swap probability, typically 2/N
};

// One batch of offspring: |P| children from binary tournaments + OX + swap
// mutation. No replacement happens here.
inline std::vector<Individual> nsga2_make_offspring(const Population& pop,
                                                    const GeneticParams& params,
                                                    CountingEvaluator& eval, RngStream& rng) {
    const RankedPopulation ranked = rank_population(pop.objectives());
    std::vector<Individual> offspring;
    offspring.reserve(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const std::size_t pa = binary_tournament(ranked, rng);
        const std::size_t pb = binary_tournament(ranked, rng);
        Permutation child = order_crossover(pop[pa].genotype, pop[pb].genotype, rng);
        child = swap_mutation(child, params.mutation_rate, rng);
        offspring.push_back(eval.make_individual(std::move(child)));
    }
    return offspring;
}

// Environment selection for the NSGA-II host: truncate P with the offspring
// and any generated solutions; `generated_accepted` (when given) is set per
// generated solution to whether it survived into the next population.
inline Population nsga2_environment_selection(const Population& pop,
                                              const std::vector<Individual>& offspring,
                                              const std::vector<Individual>& generated,
                                              std::vector<char>* generated_accepted = nullptr) {
    std::vector<Individual> pool;
    pool.reserve(pop.size() + offspring.size() + generated.size());
    pool.insert(pool.end(), pop.members().begin(), pop.members().end());
    pool.insert(pool.end(), offspring.begin(), offspring.end());
    const std::size_t generated_base = pool.size();
    pool.insert(pool.end(), generated.begin(), generated.end());

    std::vector<std::size_t> selected;
    Population next = nsga2_truncate(pool, pop.capacity(), &selected);
    if (generated_accepted) {
        generated_accepted->assign(generated.size(), 0);
        for (std::size_t i : selected)
            if (i >= generated_base) (*generated_accepted)[i - generated_base] = 1;
    }
    return next;
}

// One full baseline generation.
inline Population nsga2_generation(const Population& pop, const GeneticParams& params,
                                   CountingEvaluator& eval, RngStream& rng) {
    const std::vector<Individual> offspring = nsga2_make_offspring(pop, params, eval, rng);
    return nsga2_environment_selection(pop, offspring, {});
}

}  // namespace seqmo
