#include <catch2/catch_amalgamated.hpp>
#include <tropid/scalar.hpp>

#include <random>
#include <stdexcept>

#include "test_util.hpp"

using namespace tropid;
using tt::fin;
using tt::ninf;

TEST_CASE("oplus is max") {
    CHECK(oplus(fin(3), fin(5)) == fin(5));
    CHECK(oplus(ninf(), fin(7)) == fin(7));
    CHECK(oplus(fin(1, 2), fin(1, 3)) == fin(1, 2));
    CHECK(oplus(ninf(), ninf()) == ninf());
}

TEST_CASE("odot is classical addition with absorbing -inf") {
    CHECK(odot(fin(3), fin(5)) == fin(8));
    CHECK(odot(ninf(), fin(7)) == ninf());
    CHECK(odot(fin(7), ninf()) == ninf());
    CHECK(odot(TropScalar::one(), fin(-9, 4)) == fin(-9, 4));
    CHECK(odot(TropScalar::one(), ninf()) == ninf());
}

TEST_CASE("opow scales, with the empty-product convention at k = 0") {
    CHECK(opow(fin(3), 4) == fin(12));
    CHECK(opow(ninf(), 0) == fin(0));
    CHECK(opow(fin(-1), 2) == fin(-2));
    CHECK(opow(ninf(), 3) == ninf());
    CHECK(opow(fin(1, 2), 3) == fin(3, 2));
}

TEST_CASE("odiv subtracts and rejects division by -inf") {
    CHECK(odiv(fin(5), fin(3)) == fin(2));
    CHECK(odiv(ninf(), fin(3)) == ninf());
    CHECK(odiv(fin(0), fin(1)) == fin(-1));
    CHECK_THROWS_AS(odiv(fin(1), ninf()), std::domain_error);
}

TEST_CASE("rationals are canonicalized on construction") {
    CHECK(TropScalar::rational(2, 4) == fin(1, 2));
    CHECK(TropScalar::rational(-4, -2) == fin(2));
    CHECK(make_rat(6, -4) == make_rat(-3, 2));
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ninf().rat(), std::domain_error);
}

TEST_CASE("semiring axioms hold on random scalars") {
    std::mt19937_64 g(42);
    for (int t = 0; t < 1000; ++t) {
        TropScalar a = tt::random_scalar(g);
        TropScalar b = tt::random_scalar(g);
        TropScalar c = tt::random_scalar(g);
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(odot(a, b) == odot(b, a));
        CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
        CHECK(odot(odot(a, b), c) == odot(a, odot(b, c)));
        CHECK(odot(a, oplus(b, c)) == oplus(odot(a, b), odot(a, c)));
        CHECK(oplus(a, a) == a);
        CHECK(odot(a, TropScalar::one()) == a);
        CHECK(oplus(a, TropScalar::zero()) == a);
        CHECK(odot(a, TropScalar::zero()) == TropScalar::zero());
    }
}

TEST_CASE("Frobenius property at the scalar level") {
    std::mt19937_64 g(7);
    for (int t = 0; t < 400; ++t) {
        TropScalar a = tt::random_scalar(g);
        TropScalar b = tt::random_scalar(g);
        for (unsigned long n = 0; n <= 6; ++n)
            CHECK(opow(oplus(a, b), n) == oplus(opow(a, n), opow(b, n)));
    }
}

TEST_CASE("the order is total and compatible with oplus") {
    std::mt19937_64 g(11);
    for (int t = 0; t < 500; ++t) {
        TropScalar a = tt::random_scalar(g);
        TropScalar b = tt::random_scalar(g);
        TropScalar s = oplus(a, b);
        CHECK((s == a || s == b));
        CHECK((a < b || b < a || a == b));
        CHECK(a <= s);
        CHECK(b <= s);
    }
    CHECK(ninf() < fin(-1000000));
    CHECK_FALSE(ninf() < ninf());
    CHECK(fin(1, 3) < fin(1, 2));
}
