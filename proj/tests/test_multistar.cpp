#include <doctest.h>

#include "oracle.hpp"
#include "rembed/enumerate.hpp"
#include "rembed/errors.hpp"
#include "rembed/multistar.hpp"
#include "rembed/stirling.hpp"

using namespace rembed;

TEST_CASE("partition reduction") {
    MultistarSpec spec = reduce_partition(parse_partition("5,4,4,2,1,1"));
    CHECK(spec.reduced == Partition({5, 4, 4, 2}));
    CHECK(spec.ones_removed == 2);
    CHECK(spec.weight == 17);
    CHECK(spec.reduced_weight == 15);

    spec = reduce_partition(Partition({1, 1, 1}));
    CHECK(spec.reduced.empty());
    CHECK(spec.ones_removed == 3);
    CHECK(spec.reduced_weight == 0);

    spec = reduce_partition(Partition({2, 2}));
    CHECK(spec.reduced == Partition({2, 2}));
    CHECK(spec.ones_removed == 0);

    CHECK_THROWS_AS(reduce_partition(Partition()), PreconditionError);
}

TEST_CASE("operator polynomial for (2,2)") {
    // (1 - E^2)^2 applied to q(q+1)(q+2)(q+3)(q+4) leaves 40q + 80q^3
    IntPolynomial g = stanley_polynomial(Partition({2, 2}));
    CHECK(g.coeff(1) == 40);
    CHECK(g.coeff(2) == 0);
    CHECK(g.coeff(3) == 80);
    CHECK(g.degree() == 3);
}

TEST_CASE("operator polynomial for a full part matches the Stirling rows") {
    StirlingTable table(13);
    for (int n = 1; n <= 12; ++n) {
        IntPolynomial g = stanley_polynomial(Partition({n}));
        for (int k = 0; k <= n + 1; ++k) {
            BigInt expected = table.unsigned_value(n + 1, k) - table.signed_value(n + 1, k);
            CHECK(g.coeff(k) == expected);
        }
    }
}

TEST_CASE("a leaf part does not change the normalized distribution") {
    // distribution computed straight from the unreduced operator polynomial
    auto unreduced = [](const Partition& lam) {
        IntPolynomial g = stanley_polynomial(lam);
        BigInt cls = conj_class_size(lam);
        BigInt denom = factorial(lam.weight() + 1);
        FaceDistribution dist;
        for (int j = 1; j <= g.degree(); ++j) {
            BigInt scaled = g.coeff(j) * cls;
            REQUIRE(scaled % denom == 0);
            if (scaled != 0) dist.add(j, scaled / denom);
        }
        return dist;
    };
    for (const Partition& lam :
         {Partition({3, 1}), Partition({2, 2, 1, 1}), Partition({4, 2, 1})}) {
        CHECK(unreduced(lam).same_probabilities(
            multistar_face_distribution(lam.without_ones())));
    }
    // lambda = (1): a single edge has one face
    IntPolynomial g = stanley_polynomial(Partition({1}));
    CHECK(g == IntPolynomial::monomial(1, 2));
}

TEST_CASE("multistar distributions at the worked values") {
    FaceDistribution d3 = multistar_face_distribution(Partition({3}));
    CHECK(d3.weights() == std::map<int, BigInt>{{1, 1}, {3, 1}});

    FaceDistribution d7 = multistar_face_distribution(Partition({7}));
    CHECK(d7.weights() == std::map<int, BigInt>{{1, 180}, {3, 469}, {5, 70}, {7, 1}});

    FaceDistribution m22 = multistar_face_distribution(Partition({2, 2}));
    CHECK(m22.weights() == std::map<int, BigInt>{{1, 1}, {3, 2}});
    CHECK(m22.total() == 3);
    CHECK(m22.expectation() == Rational(7, 3));

    CHECK_THROWS_AS(multistar_face_distribution(Partition({2, 1})), PreconditionError);
}

TEST_CASE("expectations reduce and short-circuit trees") {
    CHECK(multistar_expected_faces(Partition({2, 2})) == Rational(7, 3));
    CHECK(multistar_expected_faces(Partition({1, 1, 1, 1})) == 1);
    CHECK(multistar_expected_faces(Partition({2, 2, 1, 1})) == Rational(7, 3));

    // lambda = (3,2) against the 48-embedding oracle
    Multigraph k32 = make_multistar(Partition({3, 2}));
    FaceDistribution oracle_dist = brute_force_distribution(k32);
    CHECK(oracle_dist.total() == 48);
    CHECK(multistar_expected_faces(Partition({3, 2})) == oracle_dist.expectation());
}

TEST_CASE("multistar distributions equal brute force for weight <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& lam : PartitionRange(n)) {
            if (lam.ones() > 0) continue;
            FaceDistribution exact = multistar_face_distribution(lam);
            FaceDistribution brute = brute_force_distribution(make_multistar(lam));
            CHECK(exact.same_probabilities(brute));
        }
    }
}

TEST_CASE("nonnegativity, integrality, and parity across partitions") {
    // f_lambda(j) vanishes unless j = n + l(lambda) + 1 (mod 2); weights are
    // nonnegative integers summing to |C_lambda|
    auto check_lambda = [](const Partition& lam) {
        const int n = lam.weight();
        IntPolynomial g = stanley_polynomial(lam);
        BigInt cls = conj_class_size(lam);
        BigInt denom = factorial(n + 1);
        BigInt sum = 0;
        for (int j = 0; j <= g.degree(); ++j) {
            BigInt scaled = g.coeff(j) * cls;
            CHECK(scaled >= 0);
            CHECK(scaled % denom == 0);
            BigInt w = scaled / denom;
            if ((j % 2) != ((n + lam.length() + 1) % 2)) CHECK(w == 0);
            sum += w;
        }
        CHECK(sum == cls);
    };
    for (int n = 1; n <= 20; ++n) {
        for (const Partition& lam : PartitionRange(n)) check_lambda(lam);
    }
    // spot checks at the top of the stated range
    check_lambda(Partition({40}));
    check_lambda(Partition(std::vector<int>(20, 2)));
    check_lambda(Partition({13, 9, 7, 5, 3, 2, 1}));
    check_lambda(Partition({6, 6, 6, 6, 6, 6, 2, 1, 1}));
}

// the full sweep over every partition of every n <= 40 takes about a minute;
// run on demand with: unit_tests -ts="*weight 40*" -ns
TEST_CASE("nonnegativity and integrality up to weight 40, exhaustive" * doctest::skip()) {
    for (int n = 21; n <= 40; ++n) {
        for (const Partition& lam : PartitionRange(n)) {
            IntPolynomial g = stanley_polynomial(lam);
            BigInt cls = conj_class_size(lam);
            BigInt denom = factorial(n + 1);
            BigInt sum = 0;
            for (int j = 0; j <= g.degree(); ++j) {
                BigInt scaled = g.coeff(j) * cls;
                REQUIRE(scaled >= 0);
                REQUIRE(scaled % denom == 0);
                sum += scaled / denom;
            }
            REQUIRE(sum == cls);
        }
    }
}

TEST_CASE("dipole closed forms") {
    FaceDistribution d7 = dipole_face_distribution(7);
    CHECK(d7.weights() == std::map<int, BigInt>{{1, 180}, {3, 469}, {5, 70}, {7, 1}});
    CHECK(dipole_face_distribution(3).weights() == std::map<int, BigInt>{{1, 1}, {3, 1}});

    CHECK(dipole_expected_faces(2) == 2);
    CHECK(dipole_expected_faces(3) == 2);
    CHECK(dipole_expected_faces(7) == Rational(27, 10));
    CHECK_THROWS_AS(dipole_expected_faces(1), PreconditionError);
    CHECK_THROWS_AS(dipole_face_distribution(1), PreconditionError);

    // distribution expectation equals the closed form for every n <= 200
    for (int n = 2; n <= 200; ++n) {
        CHECK(dipole_face_distribution(n).expectation() == dipole_expected_faces(n));
    }
    // and the two code paths produce identical distributions for n <= 60
    for (int n = 2; n <= 60; ++n) {
        CHECK(dipole_face_distribution(n) == multistar_face_distribution(Partition({n})));
    }
}

TEST_CASE("monopole distribution equals the subdivided multistar") {
    CHECK(monopole_face_distribution(1).weights() == std::map<int, BigInt>{{2, 1}});

    FaceDistribution two = monopole_face_distribution(2);
    CHECK(two.probability(1) == Rational(1, 3));
    CHECK(two.probability(3) == Rational(2, 3));
    CHECK(two.same_probabilities(brute_force_distribution(make_bouquet(2))));

    FaceDistribution three = monopole_face_distribution(3);
    FaceDistribution brute = brute_force_distribution(make_bouquet(3));
    CHECK(brute.total() == 120);
    CHECK(three.same_probabilities(brute));
}

TEST_CASE("monopole expectation approaches the harmonic number from above") {
    // E - H_{2n} is positive and shrinks toward zero; exact values run
    // 1/4, 13/60, 25/168, ... and first drop below 1/20 at n = 14
    Rational prev_gap;
    for (int n = 2; n <= 14; ++n) {
        Rational gap = monopole_face_distribution(n).expectation() - harmonic(2 * n);
        CHECK(gap > 0);
        if (n > 2) CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < Rational(1, 20));
}

TEST_CASE("delta values") {
    CHECK(delta(2) == 2);
    CHECK(delta(4) == Rational(7, 3));
    CHECK(delta(5) == Rational(29, 12));
    CHECK_THROWS_AS(delta(1), PreconditionError);
}

TEST_CASE("interval check") {
    IntervalReport dip = interval_check(Partition({9}));
    CHECK(dip.gap == 0); // dipoles sit at the center
    CHECK(dip.inside);

    IntervalReport m22 = interval_check(Partition({2, 2}));
    CHECK(m22.expectation == Rational(7, 3));
    CHECK(m22.dipole_value == Rational(7, 3));
    CHECK(m22.gap == 0);
    CHECK(m22.inside);

    CHECK_THROWS_AS(interval_check(Partition({1, 1})), PreconditionError);

    // exhaustive over small weights; the full 2..30 sweep runs in acceptance
    for (int n = 2; n <= 14; ++n) {
        for (const Partition& lam : PartitionRange(n)) {
            if (lam.without_ones().weight() < 2) continue;
            IntervalReport r = interval_check(lam);
            CHECK(r.inside);
            CHECK(r.gap < r.radius);
        }
    }
}
