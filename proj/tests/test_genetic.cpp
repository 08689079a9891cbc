#include <catch2/catch_amalgamated.hpp>

#include "seqmo/genetic.hpp"

using namespace seqmo;

TEST_CASE("OX keeps the segment from u and fills in v order") {
    // one-based example: u=[1,2,3,4,5], v=[5,4,3,2,1], cut points 2..4
    const Permutation u({0, 1, 2, 3, 4});
    const Permutation v({4, 3, 2, 1, 0});
    const Permutation child = order_crossover_at(u, v, 1, 3);
    REQUIRE(child.order() == std::vector<int>{4, 1, 2, 3, 0});
}

TEST_CASE("OX with identical parents reproduces the parent") {
    seqmo::RngStream rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation p = random_permutation(8, rng);
        REQUIRE(order_crossover(p, p, rng) == p);
    }
}

TEST_CASE("OX rejects length mismatch") {
    seqmo::RngStream rng(1);
    REQUIRE_THROWS_AS(order_crossover(Permutation::identity(4), Permutation::identity(5), rng),
                      std::invalid_argument);
}

TEST_CASE("OX children are always bijective") {
    seqmo::RngStream rng(99);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 2 + rng.next_below(20);
        const Permutation u = random_permutation(n, rng);
        const Permutation v = random_permutation(n, rng);
        const Permutation child = order_crossover(u, v, rng);
        REQUIRE(Permutation::is_valid_order(child.order()));
    }
}

TEST_CASE("swap mutation at rate 0 is a no-op") {
    seqmo::RngStream rng(5);
    const Permutation p = random_permutation(10, rng);
    REQUIRE(swap_mutation(p, 0.0, rng) == p);
}

TEST_CASE("swap mutation at rate 1 on two elements is the transposition") {
    seqmo::RngStream rng(6);
    const Permutation p = Permutation::identity(2);
    for (int trial = 0; trial < 100; ++trial)
        REQUIRE(swap_mutation(p, 1.0, rng).order() == std::vector<int>{1, 0});
}

TEST_CASE("swap mutation preserves bijectivity at any rate") {
    seqmo::RngStream rng(7);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng.next_below(25);
        const Permutation p = random_permutation(n, rng);
        const Permutation q = swap_mutation(p, rng.next_double(), rng);
        REQUIRE(Permutation::is_valid_order(q.order()));
    }
}

TEST_CASE("swap mutation rejects rates outside [0,1]") {
    seqmo::RngStream rng(8);
    REQUIRE_THROWS_AS(swap_mutation(Permutation::identity(3), -0.1, rng), std::invalid_argument);
    REQUIRE_THROWS_AS(swap_mutation(Permutation::identity(3), 1.5, rng), std::invalid_argument);
}
