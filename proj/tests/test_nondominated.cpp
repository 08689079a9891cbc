#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <limits>

#include "seqmo/nondominated.hpp"
#include "seqmo/rng.hpp"

using namespace seqmo;

namespace {

// brute-force classification by iterated removal, the independent oracle
std::vector<std::vector<std::size_t>> brute_force_fronts(const std::vector<ObjectiveVector>& pts) {
    std::vector<std::size_t> remaining(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) remaining[i] = i;
    std::vector<std::vector<std::size_t>> fronts;
    while (!remaining.empty()) {
        std::vector<std::size_t> front, rest;
        for (std::size_t i : remaining) {
            bool dominated = false;
            for (std::size_t j : remaining)
                if (j != i && dominates(pts[j], pts[i])) {
                    dominated = true;
                    break;
                }
            (dominated ? rest : front).push_back(i);
        }
        fronts.push_back(front);
        remaining = rest;
    }
    return fronts;
}

}  // namespace

TEST_CASE("three point example splits into two fronts") {
    const std::vector<ObjectiveVector> pts{{1, 1}, {2, 2}, {1, 3}};
    const FrontPartition fp = fast_nondominated_sort(pts);
    REQUIRE(fp.fronts.size() == 2);
    REQUIRE(fp.fronts[0] == std::vector<std::size_t>{0});
    REQUIRE(fp.fronts[1] == std::vector<std::size_t>{1, 2});
}

TEST_CASE("identical vectors share one front") {
    const std::vector<ObjectiveVector> pts(7, ObjectiveVector{3, 3});
    const FrontPartition fp = fast_nondominated_sort(pts);
    REQUIRE(fp.fronts.size() == 1);
    REQUIRE(fp.fronts[0].size() == 7);
}

TEST_CASE("a strictly increasing chain gives singleton fronts") {
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({double(i), double(i)});
    const FrontPartition fp = fast_nondominated_sort(pts);
    REQUIRE(fp.fronts.size() == 5);
    for (std::size_t r = 0; r < 5; ++r) REQUIRE(fp.fronts[r] == std::vector<std::size_t>{r});
}

TEST_CASE("empty input is an error") {
    REQUIRE_THROWS_AS(fast_nondominated_sort({}), std::invalid_argument);
}

TEST_CASE("sort agrees with the brute-force oracle on random sets") {
    seqmo::RngStream rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_below(60);
        std::vector<ObjectiveVector> pts(n);
        for (auto& p : pts) p = {double(rng.next_below(20)), double(rng.next_below(20))};
        const FrontPartition fast = fast_nondominated_sort(pts);
        const auto brute = brute_force_fronts(pts);
        REQUIRE(fast.fronts.size() == brute.size());
        for (std::size_t r = 0; r < brute.size(); ++r) {
            auto sorted = brute[r];
            std::sort(sorted.begin(), sorted.end());
            REQUIRE(fast.fronts[r] == sorted);
        }
    }
}

TEST_CASE("crowding: two or fewer points are all infinite") {
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE(crowding_distance({{1, 2}}) == std::vector<double>{inf});
    REQUIRE(crowding_distance({{1, 2}, {2, 1}}) == std::vector<double>(2, inf));
}

TEST_CASE("crowding: equally spaced collinear points give interior distance 2") {
    const std::vector<double> d = crowding_distance({{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(std::isinf(d[0]));
    REQUIRE(d[1] == Catch::Approx(2.0));
    REQUIRE(std::isinf(d[2]));
}

TEST_CASE("crowding: interior duplicates get equal finite distances") {
    const std::vector<double> d = crowding_distance({{0, 3}, {1, 2}, {1, 2}, {3, 0}});
    REQUIRE(std::isinf(d[0]));
    REQUIRE(std::isinf(d[3]));
    REQUIRE(std::isfinite(d[1]));
    REQUIRE(d[1] == Catch::Approx(d[2]));
}
