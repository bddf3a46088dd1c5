#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "rembed/errors.hpp"
#include "rembed/permutation.hpp"

using namespace rembed;

namespace {

// 1-based cycle notation, as the identities are usually written
Permutation cyc1(int m, const std::vector<std::vector<int>>& cycles) {
    std::vector<std::vector<int>> shifted;
    for (const auto& c : cycles) {
        std::vector<int> s;
        for (int x : c) s.push_back(x - 1);
        shifted.push_back(std::move(s));
    }
    return Permutation::from_cycles(m, shifted);
}

} // namespace

TEST_CASE("compose is left-to-right and matches the worked product") {
    // (1 2 3 4 5 6 7) o (1 4)(7)(2 3 5)(6) = (1 3)(2 5 6 7 4)
    Permutation p = cyc1(7, {{1, 2, 3, 4, 5, 6, 7}});
    Permutation q = cyc1(7, {{1, 4}, {2, 3, 5}});
    Permutation expected = cyc1(7, {{1, 3}, {2, 5, 6, 7, 4}});
    CHECK(compose(p, q) == expected);
}

TEST_CASE("identity is two-sided neutral") {
    Permutation q = cyc1(7, {{1, 4}, {2, 3, 5}});
    Permutation id = Permutation::identity(7);
    CHECK(compose(id, q) == q);
    CHECK(compose(q, id) == q);
}

TEST_CASE("three-cycle times its inverse is the identity") {
    Permutation p = Permutation::from_cycles(3, {{0, 1, 2}});
    Permutation q = Permutation::from_cycles(3, {{0, 2, 1}});
    CHECK(compose(p, q).is_identity());
    CHECK(p.inverse() == q);
}

TEST_CASE("compose rejects mismatched ground sets") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                    PreconditionError);
}

TEST_CASE("compose is associative on seeded random triples") {
    RandomStream rng = make_stream(7);
    for (int trial = 0; trial < 50; ++trial) {
        int m = 2 + static_cast<int>(uniform_below(rng, 9));
        Permutation a = random_full_cycle(m, rng);
        Permutation b = random_full_cycle(m, rng);
        Permutation c = random_full_cycle(m, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("cycles are canonical and cover the ground set") {
    Permutation p = cyc1(7, {{1, 3}, {2, 5, 6, 7, 4}});
    auto cycles = p.cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<int>{0, 2});
    CHECK(cycles[1] == std::vector<int>{1, 4, 5, 6, 3});
    CHECK(p.cycle_type() == Partition({5, 2}));

    Permutation id = Permutation::identity(4);
    CHECK(id.cycles().size() == 4);
    CHECK(id.cycle_type() == Partition({1, 1, 1, 1}));

    Permutation t = Permutation::from_cycles(3, {{0, 1, 2}});
    Permutation square = compose(t, t); // (0 2 1)
    CHECK(square.cycles().size() == 1);
    CHECK(square == Permutation::from_cycles(3, {{0, 2, 1}}));

    CHECK(Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}).cycle_type() == Partition({6}));
}

TEST_CASE("permutation constructor validates bijectivity") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), PreconditionError);
}

TEST_CASE("random_full_cycle basics") {
    RandomStream rng = make_stream(11);
    CHECK_THROWS_AS(random_full_cycle(0, rng), PreconditionError);
    CHECK(random_full_cycle(1, rng) == Permutation::identity(1));
    CHECK(random_full_cycle(2, rng) == Permutation::from_cycles(2, {{0, 1}}));
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(uniform_below(rng, 12));
        CHECK(random_full_cycle(m, rng).cycle_count() == 1);
    }
}

TEST_CASE("random_full_cycle is uniform over the six 4-cycles") {
    const auto cycles = oracle::all_full_cycles(4);
    REQUIRE(cycles.size() == 6);
    std::map<std::vector<int>, int> counts;
    RandomStream rng = make_stream(42);
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        ++counts[random_full_cycle(4, rng).images()];
    }
    REQUIRE(counts.size() == 6);
    // each cell within four standard deviations of n/6
    const double p = 1.0 / 6.0;
    const double sd = std::sqrt(n * p * (1 - p));
    for (const auto& images : cycles) {
        CHECK(std::abs(counts[images] - n * p) <= 4 * sd);
    }
}
