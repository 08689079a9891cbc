#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqmo/objective.hpp"
#include "seqmo/permutation.hpp"

namespace seqmo {

// Genotype plus cached objectives. Objectives are expected to come from
// evaluating the genotype and are kept consistent by construction.
struct Individual {
    Permutation genotype;
    ObjectiveVector objectives;

    Individual() = default;
    Individual(Permutation g, ObjectiveVector f)
        : genotype(std::move(g)), objectives(std::move(f)) {}
};

// Fixed-capacity multiset of individuals.
class Population {
public:
    Population() = default;
    explicit Population(std::size_t capacity) : capacity_(capacity) {
        if (capacity == 0) throw std::invalid_argument("Population: capacity must be positive");
        members_.reserve(capacity);
    }

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    void add(Individual ind) {
        if (members_.size() >= capacity_)
            throw std::length_error("Population: capacity exceeded");
        members_.push_back(std::move(ind));
    }

    Individual& operator[](std::size_t i) { return members_[i]; }
    const Individual& operator[](std::size_t i) const { return members_[i]; }

    std::vector<Individual>& members() { return members_; }
    const std::vector<Individual>& members() const { return members_; }

    std::vector<ObjectiveVector> objectives() const {
        std::vector<ObjectiveVector> out;
        out.reserve(members_.size());
        for (const auto& m : members_) out.push_back(m.objectives);
        return out;
    }

    auto begin() { return members_.begin(); }
    auto end() { return members_.end(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::size_t capacity_ = 0;
    std::vector<Individual> members_;
};

}  // namespace seqmo
