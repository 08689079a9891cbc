#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seqmo/matrix.hpp"
#include "seqmo/objective.hpp"
#include "seqmo/permutation.hpp"
#include "seqmo/rng.hpp"

namespace seqmo {

// Multi-objective TSP: K symmetric distance matrices over the same city set,
// off-diagonal entries in the open interval (0,1), zero diagonal.
struct MotspInstance {
    std::size_t n_cities = 0;
    std::vector<Matrix> distance_matrices;  // one per objective
    std::uint64_t seed = 0;                 // generation seed, informational

    std::size_t num_objectives() const { return distance_matrices.size(); }
};

// Multi-objective QAP: one location distance matrix, K facility flow matrices.
struct MoqapInstance {
    std::size_t n_facilities = 0;
    Matrix distance_matrix;
    std::vector<Matrix> flow_matrices;  // one per objective
    std::uint64_t seed = 0;

    std::size_t num_objectives() const { return flow_matrices.size(); }
};

using ProblemInstance = std::variant<MotspInstance, MoqapInstance>;

// Tour cost per objective: consecutive legs plus the closing edge.
inline ObjectiveVector evaluate_motsp(const MotspInstance& inst, const Permutation& tour) {
    if (tour.size() != inst.n_cities)
        throw std::invalid_argument("evaluate_motsp: tour length != number of cities");
    const std::size_t n = inst.n_cities;
    ObjectiveVector f(inst.num_objectives(), 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Matrix& d = inst.distance_matrices[k];
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            total += d(static_cast<std::size_t>(tour[i]), static_cast<std::size_t>(tour[i + 1]));
        total += d(static_cast<std::size_t>(tour[n - 1]), static_cast<std::size_t>(tour[0]));
        f[k] = total;
    }
    return f;
}

// Assignment cost per objective: sum over (i,j) of distance(i,j) * flow_k(tau_i, tau_j).
inline ObjectiveVector evaluate_moqap(const MoqapInstance& inst, const Permutation& assignment) {
    if (assignment.size() != inst.n_facilities)
        throw std::invalid_argument("evaluate_moqap: assignment length != number of facilities");
    const std::size_t n = inst.n_facilities;
    ObjectiveVector f(inst.num_objectives(), 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Matrix& b = inst.flow_matrices[k];
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ti = static_cast<std::size_t>(assignment[i]);
            for (std::size_t j = 0; j < n; ++j)
                total += inst.distance_matrix(i, j) * b(ti, static_cast<std::size_t>(assignment[j]));
        }
        f[k] = total;
    }
    return f;
}

inline ObjectiveVector evaluate(const ProblemInstance& inst, const Permutation& p) {
    if (const auto* motsp = std::get_if<MotspInstance>(&inst)) return evaluate_motsp(*motsp, p);
    return evaluate_moqap(std::get<MoqapInstance>(inst), p);
}

inline std::size_t instance_size(const ProblemInstance& inst) {
    if (const auto* motsp = std::get_if<MotspInstance>(&inst)) return motsp->n_cities;
    return std::get<MoqapInstance>(inst).n_facilities;
}

inline std::size_t num_objectives(const ProblemInstance& inst) {
    return std::visit([](const auto& c) { return c.num_objectives(); }, inst);
}

namespace detail {

// Entries drawn from the open interval (0,1): uniform on (eps, 1-eps).
constexpr double kOpenIntervalEps = 1e-9;

inline Matrix random_symmetric_matrix(std::size_t n, RngStream& rng) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = rng.uniform(kOpenIntervalEps, 1.0 - kOpenIntervalEps);
            m(i, j) = x;
            m(j, i) = x;
        }
    return m;
}

}  // namespace detail

inline MotspInstance generate_motsp(std::size_t n, std::size_t k, RngStream& rng) {
    if (n < 3) throw std::invalid_argument("generate_motsp: need at least 3 cities");
    if (k < 2) throw std::invalid_argument("generate_motsp: need at least 2 objectives");
    MotspInstance inst;
    inst.n_cities = n;
    inst.seed = rng.seed();
    inst.distance_matrices.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        inst.distance_matrices.push_back(detail::random_symmetric_matrix(n, rng));
    return inst;
}

inline MoqapInstance generate_moqap(std::size_t n, std::size_t k, RngStream& rng) {
    if (n < 3) throw std::invalid_argument("generate_moqap: need at least 3 facilities");
    if (k < 2) throw std::invalid_argument("generate_moqap: need at least 2 objectives");
    MoqapInstance inst;
    inst.n_facilities = n;
    inst.seed = rng.seed();
    inst.distance_matrix = detail::random_symmetric_matrix(n, rng);
    inst.flow_matrices.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        inst.flow_matrices.push_back(detail::random_symmetric_matrix(n, rng));
    return inst;
}

}  // namespace seqmo
