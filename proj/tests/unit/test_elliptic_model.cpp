#include <doctest.h>

#include <numeric>

#include "ccc/elliptic_model.hpp"
#include "support.hpp"

using namespace ccc;

namespace {

// Order of (a/n, b/n) in (Q/Z)^2 by repeated addition.
long brute_order(long a, long b, long n) {
    for (long k = 1;; ++k)
        if ((k * a) % n == 0 && (k * b) % n == 0) return k;
}

}  // namespace

TEST_CASE("d_of_n examples and range") {
    CHECK(d_of_n(3) == 3);
    CHECK(d_of_n(4) == 2);
    CHECK(d_of_n(1) == 1);
    for (long n = 1; n <= 1000; ++n) {
        CHECK(d_of_n(2 * n) == n);
        CHECK(d_of_n(2 * n + 1) == 2 * n + 1);
    }
    CHECK_THROWS_AS(d_of_n(0), std::invalid_argument);
}

TEST_CASE("torsion point orders") {
    CHECK(torsion_point_order({Rational(0), Rational(0)}) == 1);
    CHECK(torsion_point_order({Rational(1, 4), Rational(0)}) == 4);
    CHECK(torsion_point_order({Rational(1, 2), Rational(1, 3)}) == 6);
    for (long n = 1; n <= 24; ++n)
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                CHECK(torsion_point_order({Rational(a, n), Rational(b, n)}) == brute_order(a, b, n));
}

TEST_CASE("torsion point reduction and canonical point") {
    const TorsionPoint t(Rational(5, 4), Rational(-1, 3));
    CHECK(t.coords()[0] == Rational(1, 4));
    CHECK(t.coords()[1] == Rational(2, 3));
    CHECK(t.order() == 12);
    const TorsionPoint c = TorsionPoint::canonical(8);
    CHECK(c.coords()[0] == Rational(1, 8));
    CHECK(c.coords()[1] == 0);
    CHECK(TorsionPoint::canonical(1).is_origin());
    CHECK_THROWS_AS(TorsionPoint::canonical(0), std::invalid_argument);
}

TEST_CASE("scaled difference class examples") {
    const auto five = scaled_difference_class(2, TorsionPoint(Rational(1, 5), Rational(0)));
    CHECK(five.degree == 0);
    CHECK(class_order(five) == 5);
    CHECK(class_order(scaled_difference_class(2, TorsionPoint(Rational(1, 8), Rational(0)))) == 4);
    const TorsionPoint t(Rational(2, 7), Rational(3, 7));
    CHECK(scaled_difference_class(7, t).is_zero());
}

TEST_CASE("class order examples") {
    CHECK(class_order(ZeroCycleClass{}) == 1);
    CHECK(class_order(ZeroCycleClass{0, {Rational(1, 2), Rational(1, 2)}}) == 2);
    const auto c = scaled_difference_class(2, TorsionPoint(Rational(1, 12), Rational(0)));
    CHECK(c.aj[0] == Rational(1, 6));
    CHECK(class_order(c) == 6);
    CHECK_THROWS_AS(class_order(ZeroCycleClass::point(TorusPoint{Rational(0), Rational(0)})), std::invalid_argument);
}

TEST_CASE("2([t] - [e]) has order d(n) for every point of exact order n <= 64") {
    for (long n = 1; n <= 64; ++n)
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                if (std::gcd(std::gcd(a, b), n) != 1) continue;
                const TorsionPoint t(Rational(a, n), Rational(b, n));
                REQUIRE(t.order() == n);
                CHECK(class_order(scaled_difference_class(2, t)) == d_of_n(n));
            }
}

TEST_CASE("scaled difference class is additive in k") {
    auto g = testing_support::rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const long n = testing_support::uniform(g, 1, 30);
        const TorsionPoint t(Rational(testing_support::uniform(g, 0, n - 1), n),
                             Rational(testing_support::uniform(g, 0, n - 1), n));
        const long k1 = testing_support::uniform(g, -20, 20), k2 = testing_support::uniform(g, -20, 20);
        CHECK(scaled_difference_class(k1 + k2, t) == scaled_difference_class(k1, t) + scaled_difference_class(k2, t));
    }
}

TEST_CASE("zero-cycle arithmetic") {
    const auto p = ZeroCycleClass::point(TorusPoint{Rational(1, 3), Rational(1, 2)});
    CHECK(p.degree == 1);
    CHECK((p - p).is_zero());
    CHECK((Integer(3) * p).aj == TorusPoint{Rational(0), Rational(1, 2)});
    CHECK((-p).degree == -1);
    CHECK((-p).aj == TorusPoint{Rational(2, 3), Rational(1, 2)});
    CHECK(odd_part(48) == 3);
    CHECK(odd_part(7) == 7);
}

TEST_CASE("elliptic curve lattices") {
    CHECK(EllipticCurveLattice::intersection(0, 1) == 1);
    CHECK(EllipticCurveLattice::intersection(1, 0) == -1);
    CHECK(EllipticCurveLattice::intersection(0, 0) == 0);
    CHECK_NOTHROW(EllipticCurveLattice("E1", {"v0", "v1"}, CmData{2, -1}));
    CHECK_THROWS_AS(EllipticCurveLattice("E1", {"v0", "v1"}, CmData{0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(EllipticCurveLattice("E1", {"v0", "v1"}, CmData{1, 0}), std::invalid_argument);
}

TEST_CASE("primitive direction") {
    CHECK(TorsionPoint::canonical(4).primitive_direction() == std::array<Integer, 2>{1, 0});
    CHECK(TorsionPoint(Rational(2, 6), Rational(4, 6)).primitive_direction() == std::array<Integer, 2>{1, 2});
    CHECK(TorsionPoint(Rational(0), Rational(3, 4)).primitive_direction() == std::array<Integer, 2>{0, 1});
}
