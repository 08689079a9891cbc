#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "seqmo/permutation.hpp"
#include "seqmo/rng.hpp"

namespace seqmo {

// Order crossover core with explicit cut points [a, b], both inclusive:
// copy the segment u[a..b], fill the remaining positions left to right with
// the missing values in the order they appear in v.
inline Permutation order_crossover_at(const Permutation& u, const Permutation& v,
                                      std::size_t a, std::size_t b) {
    if (u.size() != v.size())
        throw std::invalid_argument("order_crossover_at: parent length mismatch");
    const std::size_t n = u.size();
    if (b >= n || a > b) throw std::invalid_argument("order_crossover_at: bad cut points");

    PermutationBuilder child(n);
    std::vector<char> in_segment(n, 0);
    for (std::size_t i = a; i <= b; ++i) {
        child.set(i, u[i]);
        in_segment[static_cast<std::size_t>(u[i])] = 1;
    }
    std::size_t fill = (a == 0) ? b + 1 : 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int value = v[i];
        if (in_segment[static_cast<std::size_t>(value)]) continue;
        child.set(fill, value);
        ++fill;
        if (fill == a) fill = b + 1;
    }
    return std::move(child).build();
}

// OX with uniformly drawn cut points.
inline Permutation order_crossover(const Permutation& u, const Permutation& v, RngStream& rng) {
    if (u.size() != v.size())
        throw std::invalid_argument("order_crossover: parent length mismatch");
    const std::size_t n = u.size();
    std::size_t a = static_cast<std::size_t>(rng.next_below(n));
    std::size_t b = static_cast<std::size_t>(rng.next_below(n));
    if (a > b) std::swap(a, b);
    return order_crossover_at(u, v, a, b);
}

// Per-position swap mutation: each position i < n-1 is, with probability
// `rate`, swapped with a uniformly drawn partner to its right. Expected
// number of swaps is rate * (n - 1).
inline Permutation swap_mutation(const Permutation& p, double rate, RngStream& rng) {
    if (rate < 0.0 || rate > 1.0)
        throw std::invalid_argument("swap_mutation: rate must be a probability");
    std::vector<int> order = p.order();
    const std::size_t n = order.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!rng.bernoulli(rate)) continue;
        const std::size_t j = i + 1 + static_cast<std::size_t>(rng.next_below(n - i - 1));
        std::swap(order[i], order[j]);
    }
    return Permutation(std::move(order));
}

}  // namespace seqmo
