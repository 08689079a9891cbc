#pragma once

#include <cstdint>

#include "seqmo/population.hpp"
#include "seqmo/problems.hpp"

namespace seqmo {

// Routes every objective evaluation through one audited counter so the
// function-evaluation budget is exact.
class CountingEvaluator {
public:
    explicit CountingEvaluator(const ProblemInstance& inst) : inst_(&inst) {}

    ObjectiveVector operator()(const Permutation& p) {
        ++count_;
        return evaluate(*inst_, p);
    }

    Individual make_individual(Permutation p) {
        ObjectiveVector f = (*this)(p);
        return Individual(std::move(p), std::move(f));
    }

    std::int64_t count() const { return count_; }
    const ProblemInstance& instance() const { return *inst_; }

private:
    const ProblemInstance* inst_;
    std::int64_t count_ = 0;
};

}  // namespace seqmo
