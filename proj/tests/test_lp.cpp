#include <catch2/catch_amalgamated.hpp>
#include <tropid/lp.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using namespace tropid;

namespace {

LinearInequality ineq(std::vector<long> coeffs, long constant, bool strict) {
    LinearInequality c;
    for (long v : coeffs) c.coeffs.emplace_back(v);
    c.constant = constant;
    c.strict = strict;
    return c;
}

Rat value_at(const LinearInequality& c, const RatVec& x) {
    Rat s = c.constant;
    for (std::size_t j = 0; j < x.size(); ++j) s += c.coeffs[j] * x[j];
    return s;
}

/// A Feasible outcome must carry an exact witness: strict rows hold with
/// slack at least the reported margin, weak rows hold weakly.
void check_witness(const std::vector<LinearInequality>& strict,
                   const std::vector<LinearInequality>& weak, std::size_t m,
                   const LPOutcome& out) {
    REQUIRE(out.feasible);
    REQUIRE(out.witness.size() == m);
    REQUIRE(out.margin > 0);
    for (const auto& c : strict) CHECK(value_at(c, out.witness) >= out.margin);
    for (const auto& c : weak) CHECK(value_at(c, out.witness) >= 0);
}

}  // namespace

TEST_CASE("a single strictly positive variable is feasible") {
    std::vector<LinearInequality> strict = {ineq({1}, 0, true)};
    LPOutcome out = solve_strict_feasibility(strict, {}, 1);
    check_witness(strict, {}, 1, out);
    CHECK(out.witness[0] > 0);
}

TEST_CASE("contradictory strict constraints are infeasible") {
    std::vector<LinearInequality> strict = {ineq({1}, 0, true), ineq({-1}, 0, true)};
    CHECK_FALSE(solve_strict_feasibility(strict, {}, 1).feasible);
}

TEST_CASE("strict dominance over a weakly bounded variable is feasible") {
    std::vector<LinearInequality> strict = {ineq({1, -1}, 0, true)};
    std::vector<LinearInequality> weak = {ineq({0, 1}, 0, false)};
    LPOutcome out = solve_strict_feasibility(strict, weak, 2);
    check_witness(strict, weak, 2, out);
    CHECK(out.witness[0] > out.witness[1]);
    CHECK(out.witness[1] >= 0);
}

TEST_CASE("weak equality pins the witness exactly") {
    std::vector<LinearInequality> weak = {ineq({1}, -3, false), ineq({-1}, 3, false)};
    CHECK_FALSE(solve_strict_feasibility({ineq({1}, -3, true)}, weak, 1).feasible);
    LPOutcome out = solve_strict_feasibility({ineq({1}, -2, true)}, weak, 1);
    REQUIRE(out.feasible);
    CHECK(out.witness[0] == 3);
}

TEST_CASE("zero-dimensional systems reduce to constant signs") {
    CHECK(solve_strict_feasibility({}, {}, 0).feasible);
    CHECK(solve_strict_feasibility({ineq({}, 1, true)}, {}, 0).feasible);
    CHECK_FALSE(solve_strict_feasibility({ineq({}, -1, true)}, {}, 0).feasible);
    CHECK_FALSE(solve_strict_feasibility({ineq({}, 0, true)}, {}, 0).feasible);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(solve_strict_feasibility({ineq({1, 0}, 0, true)}, {}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(fm_eliminate({ineq({1, 0}, 0, false)}, {}, 1), std::invalid_argument);
}

TEST_CASE("Fourier-Motzkin agrees on the hand-built instances") {
    CHECK(fm_eliminate({}, {ineq({1}, 0, true)}, 1));
    CHECK_FALSE(fm_eliminate({}, {ineq({1}, 0, true), ineq({-1}, 0, true)}, 1));
    CHECK(fm_eliminate({ineq({0, 1}, 0, false)}, {ineq({1, -1}, 0, true)}, 2));
    CHECK(fm_eliminate({}, {}, 0));
    CHECK_FALSE(fm_eliminate({}, {ineq({0}, -1, true)}, 1));
    std::vector<LinearInequality> nine(1, ineq(std::vector<long>(9, 1), 0, true));
    CHECK_THROWS_AS(fm_eliminate({}, nine, 9), std::invalid_argument);
}

TEST_CASE("simplex and Fourier-Motzkin agree on random systems") {
    std::mt19937_64 g(2024);
    for (int inst = 0; inst < 1000; ++inst) {
        std::size_t m = 1 + g() % 4;
        std::size_t k = 1 + g() % 8;
        std::vector<LinearInequality> strict, weak;
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<long> coeffs(m);
            for (auto& v : coeffs) v = static_cast<long>(g() % 7) - 3;
            long constant = static_cast<long>(g() % 7) - 3;
            bool is_strict = g() % 2 == 0;
            (is_strict ? strict : weak).push_back(ineq(coeffs, constant, is_strict));
        }
        LPOutcome out = solve_strict_feasibility(strict, weak, m);
        bool fm = fm_eliminate(weak, strict, m);
        CHECK(out.feasible == fm);
        if (out.feasible) check_witness(strict, weak, m, out);
    }
}
