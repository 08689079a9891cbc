#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqmo/rng.hpp"

namespace seqmo {

// A bijective arrangement of {0, ..., n-1}. Indices are 0-based everywhere
// in memory; serialization shifts to 1-based at the I/O boundary.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> order) : order_(std::move(order)) {
        if (!is_valid_order(order_))
            throw std::invalid_argument("Permutation: order is not a bijection of 0..n-1");
    }

    Permutation(std::initializer_list<int> order) : Permutation(std::vector<int>(order)) {}

    static Permutation identity(std::size_t n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v), unchecked_tag{});
    }

    std::size_t size() const { return order_.size(); }
    int operator[](std::size_t i) const { return order_[i]; }
    const std::vector<int>& order() const { return order_; }

    // position of value v, inverse lookup in O(n)
    std::size_t position_of(int v) const {
        for (std::size_t i = 0; i < order_.size(); ++i)
            if (order_[i] == v) return i;
        throw std::out_of_range("Permutation::position_of: value not present");
    }

    bool operator==(const Permutation& other) const { return order_ == other.order_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

    static bool is_valid_order(const std::vector<int>& order) {
        const std::size_t n = order.size();
        if (n == 0) return false;
        std::vector<char> seen(n, 0);
        for (int v : order) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> order, unchecked_tag) : order_(std::move(order)) {}

    friend Permutation random_permutation(std::size_t n, RngStream& rng);
    friend class PermutationBuilder;

    std::vector<int> order_;
};

// Fisher-Yates shuffle of the identity, uniform over all n! permutations.
inline Permutation random_permutation(std::size_t n, RngStream& rng) {
    if (n == 0) throw std::invalid_argument("random_permutation: n must be >= 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(v[i], v[j]);
    }
    return Permutation(std::move(v), Permutation::unchecked_tag{});
}

// Assembles a permutation value-by-value; validity is enforced on build.
// Used by operators that construct children incrementally.
class PermutationBuilder {
public:
    explicit PermutationBuilder(std::size_t n) : order_(n, -1) {}

    void set(std::size_t pos, int value) { order_[pos] = value; }
    int get(std::size_t pos) const { return order_[pos]; }

    Permutation build() && {
        if (!Permutation::is_valid_order(order_))
            throw std::logic_error("PermutationBuilder: incomplete or invalid permutation");
        return Permutation(std::move(order_), Permutation::unchecked_tag{});
    }

private:
    std::vector<int> order_;
};

}  // namespace seqmo
