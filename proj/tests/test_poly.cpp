#include <catch2/catch_amalgamated.hpp>
#include <tropid/poly.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"

using namespace tropid;
using tt::fin;
using tt::mono;
using tt::ninf;
using tt::poly;

namespace {

LinearInequality weak_ineq(std::vector<long> coeffs, long constant) {
    LinearInequality c;
    for (long v : coeffs) c.coeffs.emplace_back(v);
    c.constant = constant;
    return c;
}

/// Restriction of f to the face where the variables in `face` are pinned to
/// -inf: monomials touching the face vanish, the rest project onto the
/// remaining coordinates.
TropPoly face_restriction(const TropPoly& f, const std::vector<bool>& face,
                          std::size_t kept) {
    std::vector<Monomial> ms;
    for (const auto& m : f.monomials()) {
        bool vanishes = false;
        std::vector<unsigned> e;
        e.reserve(kept);
        for (std::size_t j = 0; j < face.size(); ++j) {
            if (face[j] && m.exponents[j] > 0) vanishes = true;
            if (!face[j]) e.push_back(m.exponents[j]);
        }
        if (!vanishes) ms.push_back(Monomial{std::move(e), m.coeff});
    }
    return TropPoly(kept, std::move(ms));
}

}  // namespace

TEST_CASE("eval maximizes over monomials") {
    TropPoly f = poly(1, {mono({2}), mono({1}), mono({0})});
    CHECK(eval(f, {fin(3)}) == fin(6));
    CHECK(eval(f, {ninf()}) == fin(0));
    CHECK(eval(poly(1, {mono({1}), mono({0})}), {fin(-5)}) == fin(0));
    CHECK(eval(poly(1, {mono({1})}), {ninf()}) == ninf());
    CHECK(eval(TropPoly(1), {fin(3)}) == ninf());
    CHECK_THROWS_AS(eval(f, {fin(1), fin(2)}), std::invalid_argument);
}

TEST_CASE("construction merges duplicate exponent vectors by max coefficient") {
    TropPoly f = poly(1, {mono({1}, 1), mono({1}, 2)});
    CHECK(f == poly(1, {mono({1}, 2)}));
    CHECK(f.monomials().size() == 1);
    CHECK_THROWS_AS(poly(2, {mono({1})}), std::invalid_argument);
}

TEST_CASE("padd and pmul expand and merge") {
    TropPoly lin = poly(1, {mono({1}), mono({0})});
    CHECK(pmul(lin, lin) == poly(1, {mono({2}), mono({1}), mono({0})}));
    std::mt19937_64 g(3);
    for (int t = 0; t < 100; ++t) {
        TropPoly f = tt::random_poly(g, 2, 6);
        CHECK(padd(f, f) == f);
    }
    CHECK_THROWS_AS(padd(lin, TropPoly(2)), std::invalid_argument);
    CHECK_THROWS_AS(pmul(lin, TropPoly(2)), std::invalid_argument);
}

TEST_CASE("ppow iterates pmul from the constant one") {
    TropPoly f = poly(2, {mono({1, 0}, 1), mono({0, 1}, -2)});
    CHECK(ppow(f, 0) == TropPoly::constant(2, TropScalar::one()));
    CHECK(ppow(f, 1) == f);
    CHECK(ppow(f, 2) == pmul(f, f));
}

TEST_CASE("binomial powers keep only the pure powers") {
    TropPoly f = poly(2, {mono({1, 0}, 1), mono({0, 1}, -2)});
    CHECK(essential_part(ppow(f, 3)) == poly(2, {mono({3, 0}, 3), mono({0, 3}, -6)}));
}

TEST_CASE("Frobenius property for polynomial powers") {
    std::mt19937_64 g(17);
    for (int t = 0; t < 60; ++t) {
        std::size_t m = 1 + g() % 3;
        TropPoly f = tt::random_poly(g, m, 4, 3);
        for (unsigned long n = 1; n <= 4; ++n) {
            TropPoly sum_of_powers(m);
            for (const auto& mo : f.monomials())
                sum_of_powers = padd(sum_of_powers, ppow(TropPoly(m, {mo}), n));
            CHECK(essential_part(ppow(f, n)) == essential_part(sum_of_powers));
        }
    }
}

TEST_CASE("the middle monomial of the quadratic chain is inessential") {
    TropPoly f = poly(1, {mono({2}), mono({1}), mono({0})});
    CHECK_FALSE(is_essential(f, tt::index_of(f, {1})).essential);
    EssentialVerdict top = is_essential(f, tt::index_of(f, {2}));
    REQUIRE(top.essential);
    CHECK(top.witness[0] > 0);
    CHECK(essential_part(f) == poly(1, {mono({2}), mono({0})}));
}

TEST_CASE("a lone monomial is essential and errors are rejected") {
    TropPoly f = poly(2, {mono({3, 1}, -5)});
    CHECK(is_essential(f, 0).essential);
    CHECK(essential_part(f) == f);
    CHECK_THROWS_AS(is_essential(f, 1), std::invalid_argument);
}

TEST_CASE("flat chains drop their middle monomial") {
    CHECK(essential_part(poly(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})})) ==
          poly(2, {mono({2, 0}), mono({0, 2})}));
    std::mt19937_64 g(23);
    for (int t = 0; t < 200; ++t) {
        unsigned k = 1 + g() % 3;
        unsigned j1 = k + g() % 5;
        unsigned j2 = k + g() % 5;
        long c = static_cast<long>(g() % 11) - 5;
        TropPoly f = poly(2, {mono({j1 + k, j2 - k}, c), mono({j1, j2}, c),
                              mono({j1 - k, j2 + k}, c)});
        if (f.monomials().size() != 3) continue;
        CHECK_FALSE(is_essential(f, tt::index_of(f, {j1, j2})).essential);
    }
}

TEST_CASE("essential_part is idempotent and preserves the function") {
    std::mt19937_64 g(29);
    for (int t = 0; t < 150; ++t) {
        std::size_t m = 1 + g() % 3;
        TropPoly f = tt::random_poly(g, m, 10);
        TropPoly e = essential_part(f);
        CHECK(essential_part(e) == e);
        for (int p = 0; p < 30; ++p) {
            auto pt = tt::random_point(g, m);
            CHECK(eval(f, pt) == eval(e, pt));
        }
    }
}

TEST_CASE("e-equivalence matches essential-part equality") {
    TropPoly f = poly(1, {mono({2}), mono({1}), mono({0})});
    TropPoly g = poly(1, {mono({2}), mono({0})});
    CHECK(e_equivalent(f, g).equivalent);

    PolyEquiv d = e_equivalent(poly(2, {mono({1, 0}), mono({0, 1})}), poly(2, {mono({1, 0})}));
    REQUIRE_FALSE(d.equivalent);
    CHECK(d.f_value != d.g_value);
    auto pt = detail::rational_point(d.witness);
    CHECK(eval(poly(2, {mono({1, 0}), mono({0, 1})}), pt) == d.f_value);
    CHECK(eval(poly(2, {mono({1, 0})}), pt) == d.g_value);
}

TEST_CASE("the -inf polynomial is equivalent only to itself") {
    CHECK(e_equivalent(TropPoly(2), TropPoly(2)).equivalent);
    PolyEquiv d = e_equivalent(TropPoly(1), TropPoly::constant(1, fin(0)));
    REQUIRE_FALSE(d.equivalent);
    CHECK(d.f_value == ninf());
    CHECK(d.g_value == fin(0));
}

TEST_CASE("equivalence verdicts are exact on random pairs") {
    std::mt19937_64 g(31);
    for (int t = 0; t < 120; ++t) {
        std::size_t m = 1 + g() % 3;
        TropPoly f = tt::random_poly(g, m, 8);
        TropPoly h = tt::random_poly(g, m, 8);
        PolyEquiv v = e_equivalent(f, h);
        if (v.equivalent) {
            CHECK(essential_part(f) == essential_part(h));
            for (int p = 0; p < 25; ++p) {
                auto pt = tt::random_point(g, m);
                CHECK(eval(f, pt) == eval(h, pt));
            }
        } else {
            auto pt = detail::rational_point(v.witness);
            CHECK(eval(f, pt) != eval(h, pt));
        }
    }
}

TEST_CASE("adding a strictly dominated monomial never changes the function") {
    std::mt19937_64 g(37);
    for (int t = 0; t < 120; ++t) {
        std::size_t m = 1 + g() % 3;
        TropPoly f = tt::random_poly(g, m, 6);
        Monomial lowered = f.monomials()[g() % f.monomials().size()];
        lowered.coeff -= 1 + static_cast<long>(g() % 3);
        TropPoly h = padd(f, TropPoly(m, {lowered}));
        CHECK(e_equivalent(f, h).equivalent);
        CHECK(essential_part(f) == essential_part(h));
    }
}

TEST_CASE("regions require a nonempty interior") {
    CHECK_THROWS_AS(Region(1, {weak_ineq({1}, 0), weak_ineq({-1}, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Region(2, {weak_ineq({1}, 0)}), std::invalid_argument);
    Region ok(2, {weak_ineq({1, 0}, 0), weak_ineq({0, 1}, 0)});
    CHECK(ok.constraints().size() == 2);
}

TEST_CASE("essentiality and equivalence restricted to a region") {
    Region r(3, {weak_ineq({-1, -1, 1}, 0)});
    TropPoly f = poly(3, {mono({0, 0, 1}), mono({1, 1, 0})});
    TropPoly g = poly(3, {mono({0, 0, 1})});
    CHECK_FALSE(is_essential(f, tt::index_of(f, {1, 1, 0}), &r).essential);
    CHECK(is_essential(f, tt::index_of(f, {0, 0, 1}), &r).essential);
    CHECK(e_equivalent(f, g, &r).equivalent);
    CHECK_FALSE(e_equivalent(f, g).equivalent);
    CHECK(essential_part(f, &r) == g);
    CHECK_THROWS_AS(is_essential(poly(2, {mono({1, 0})}), 0, &r), std::invalid_argument);
}

TEST_CASE("face restrictions expose no new essential monomials") {
    std::mt19937_64 g(41);
    for (int t = 0; t < 150; ++t) {
        std::size_t m = 1 + g() % 3;
        TropPoly f = tt::random_poly(g, m, 8, 3);
        TropPoly e = essential_part(f);
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<bool> face(m);
            std::size_t kept = 0;
            for (std::size_t j = 0; j < m; ++j) {
                face[j] = (mask >> j) & 1u;
                if (!face[j]) ++kept;
            }
            TropPoly rest = face_restriction(f, face, kept);
            for (const auto& mo : f.monomials()) {
                bool on_face = true;
                std::vector<unsigned> proj;
                for (std::size_t j = 0; j < m; ++j) {
                    if (face[j] && mo.exponents[j] > 0) on_face = false;
                    if (!face[j]) proj.push_back(mo.exponents[j]);
                }
                if (!on_face) continue;
                std::size_t ridx = tt::index_of(rest, proj);
                REQUIRE(ridx < rest.monomials().size());
                if (is_essential(rest, ridx).essential)
                    CHECK(tt::index_of(e, mo.exponents) < e.monomials().size());
            }
        }
    }
}
