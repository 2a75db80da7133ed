/// Multivariate tropical polynomials: evaluation, semiring arithmetic,
/// monomial essentiality, essential parts, and e-equivalence, optionally
/// relative to a polyhedral constraint region.
#pragma once

#include <tropid/lp.hpp>
#include <tropid/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tropid {

struct Monomial {
    std::vector<unsigned> exponents;
    Rat coeff;  // always finite; absent monomials are simply not stored

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents && a.coeff == b.coeff;
    }
};

/// Finite max of affine monomials. Monomials are kept sorted by exponent
/// vector and duplicate exponent vectors merge by max coefficient, so
/// structural equality is decidable. The empty set is the -inf polynomial.
class TropPoly {
public:
    explicit TropPoly(std::size_t arity) : arity_(arity) {}

    TropPoly(std::size_t arity, std::vector<Monomial> monomials) : arity_(arity) {
        for (const auto& mono : monomials)
            if (mono.exponents.size() != arity)
                throw std::invalid_argument("TropPoly: monomial arity mismatch");
        std::sort(monomials.begin(), monomials.end(),
                  [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
        for (auto& mono : monomials) {
            if (!mono_.empty() && mono_.back().exponents == mono.exponents) {
                if (mono.coeff > mono_.back().coeff) mono_.back().coeff = mono.coeff;
            } else {
                mono_.push_back(std::move(mono));
            }
        }
    }

    static TropPoly constant(std::size_t arity, const TropScalar& c) {
        if (c.is_neg_infinity()) return TropPoly(arity);
        return TropPoly(arity, {Monomial{std::vector<unsigned>(arity, 0), c.rat()}});
    }

    /// The monomial 0 * x_index.
    static TropPoly variable(std::size_t arity, std::size_t index) {
        if (index >= arity) throw std::invalid_argument("TropPoly::variable: index out of range");
        std::vector<unsigned> e(arity, 0);
        e[index] = 1;
        return TropPoly(arity, {Monomial{std::move(e), Rat(0)}});
    }

    std::size_t arity() const { return arity_; }
    const std::vector<Monomial>& monomials() const { return mono_; }
    bool is_neg_infinity() const { return mono_.empty(); }

    friend bool operator==(const TropPoly& a, const TropPoly& b) {
        return a.arity_ == b.arity_ && a.mono_ == b.mono_;
    }
    friend bool operator!=(const TropPoly& a, const TropPoly& b) { return !(a == b); }

private:
    std::size_t arity_;
    std::vector<Monomial> mono_;
};

inline TropScalar eval(const TropPoly& f, const std::vector<TropScalar>& point) {
    if (point.size() != f.arity()) throw std::invalid_argument("eval: arity mismatch");
    TropScalar best = TropScalar::neg_infinity();
    for (const auto& mono : f.monomials()) {
        Rat v = mono.coeff;
        bool vanished = false;
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (mono.exponents[j] == 0) continue;
            if (point[j].is_neg_infinity()) {
                vanished = true;
                break;
            }
            v += point[j].rat() * static_cast<unsigned long>(mono.exponents[j]);
        }
        if (!vanished) best = oplus(best, TropScalar(v));
    }
    return best;
}

inline TropPoly padd(const TropPoly& f, const TropPoly& g) {
    if (f.arity() != g.arity()) throw std::invalid_argument("padd: arity mismatch");
    std::vector<Monomial> ms = f.monomials();
    ms.insert(ms.end(), g.monomials().begin(), g.monomials().end());
    return TropPoly(f.arity(), std::move(ms));
}

inline TropPoly pmul(const TropPoly& f, const TropPoly& g) {
    if (f.arity() != g.arity()) throw std::invalid_argument("pmul: arity mismatch");
    std::vector<Monomial> ms;
    ms.reserve(f.monomials().size() * g.monomials().size());
    for (const auto& a : f.monomials()) {
        for (const auto& b : g.monomials()) {
            Monomial m;
            m.exponents.resize(f.arity());
            for (std::size_t j = 0; j < f.arity(); ++j)
                m.exponents[j] = a.exponents[j] + b.exponents[j];
            m.coeff = a.coeff + b.coeff;
            ms.push_back(std::move(m));
        }
    }
    return TropPoly(f.arity(), std::move(ms));
}

inline TropPoly ppow(const TropPoly& f, unsigned long n) {
    TropPoly acc = TropPoly::constant(f.arity(), TropScalar::one());
    for (unsigned long i = 0; i < n; ++i) acc = pmul(acc, f);
    return acc;
}

/// Conjunction of weak rational linear inequalities over the polynomial
/// variables. Construction probes interior nonemptiness with a strict LP and
/// rejects degenerate regions, so every accepted region is the closure of
/// its interior when full-dimensional.
class Region {
public:
    Region(std::size_t arity, std::vector<LinearInequality> constraints)
        : arity_(arity), cons_(std::move(constraints)) {
        std::vector<LinearInequality> strictified;
        strictified.reserve(cons_.size());
        for (auto& c : cons_) {
            if (c.coeffs.size() != arity_)
                throw std::invalid_argument("Region: constraint arity mismatch");
            c.strict = false;
            LinearInequality s = c;
            s.strict = true;
            strictified.push_back(std::move(s));
        }
        if (!solve_strict_feasibility(strictified, {}, arity_).feasible)
            throw std::invalid_argument("Region: degenerate region (empty interior)");
    }

    std::size_t arity() const { return arity_; }
    const std::vector<LinearInequality>& constraints() const { return cons_; }

private:
    std::size_t arity_;
    std::vector<LinearInequality> cons_;
};

struct EssentialVerdict {
    bool essential = false;
    RatVec witness;  // point where the target strictly exceeds the rest of f
};

namespace detail {

inline LinearInequality monomial_gap(const Monomial& h, const Monomial& g, bool strict) {
    LinearInequality ineq;
    ineq.strict = strict;
    ineq.coeffs.resize(h.exponents.size());
    for (std::size_t j = 0; j < h.exponents.size(); ++j)
        ineq.coeffs[j] = static_cast<long>(h.exponents[j]) - static_cast<long>(g.exponents[j]);
    ineq.constant = h.coeff - g.coeff;
    return ineq;
}

inline void check_region(const TropPoly& f, const Region* region, const char* who) {
    if (region && region->arity() != f.arity())
        throw std::invalid_argument(std::string(who) + ": region arity mismatch");
}

}  // namespace detail

/// Decides whether the target monomial strictly achieves the maximum of f at
/// some rational point (inside the region when one is given). One strict LP:
/// target - g > 0 for every other monomial g, weak region constraints.
inline EssentialVerdict is_essential(const TropPoly& f, std::size_t target,
                                     const Region* region = nullptr) {
    if (target >= f.monomials().size())
        throw std::invalid_argument("is_essential: target not in polynomial");
    detail::check_region(f, region, "is_essential");
    std::vector<LinearInequality> strict;
    strict.reserve(f.monomials().size());
    const Monomial& h = f.monomials()[target];
    for (std::size_t i = 0; i < f.monomials().size(); ++i) {
        if (i == target) continue;
        strict.push_back(detail::monomial_gap(h, f.monomials()[i], true));
    }
    const std::vector<LinearInequality> no_weak;
    LPOutcome out = solve_strict_feasibility(
        strict, region ? region->constraints() : no_weak, f.arity());
    return EssentialVerdict{out.feasible, std::move(out.witness)};
}

inline EssentialVerdict is_essential(const TropPoly& f, const Monomial& target,
                                     const Region* region = nullptr) {
    for (std::size_t i = 0; i < f.monomials().size(); ++i) {
        if (f.monomials()[i] == target) return is_essential(f, i, region);
    }
    throw std::invalid_argument("is_essential: target not in polynomial");
}

/// Keeps exactly the essential monomials of f; the result is the canonical
/// representative of f's function (on the region when one is given).
inline TropPoly essential_part(const TropPoly& f, const Region* region = nullptr) {
    detail::check_region(f, region, "essential_part");
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < f.monomials().size(); ++i)
        if (is_essential(f, i, region).essential) kept.push_back(f.monomials()[i]);
    return TropPoly(f.arity(), std::move(kept));
}

struct PolyEquiv {
    bool equivalent = false;
    RatVec witness;  // point with f(witness) != g(witness) when distinct
    TropScalar f_value, g_value;
};

namespace detail {

/// Searches for a rational point (in the region) where f exceeds g, i.e.
/// where some monomial of f strictly dominates every monomial of g. A
/// monomial whose exact exponent vector appears in g with a coefficient at
/// least as large can never strictly dominate and is skipped without an LP.
inline std::optional<RatVec> dominance_witness(const TropPoly& f, const TropPoly& g,
                                               const Region* region) {
    const std::vector<LinearInequality> no_weak;
    const auto& weak = region ? region->constraints() : no_weak;
    for (const auto& h : f.monomials()) {
        auto it = std::lower_bound(
            g.monomials().begin(), g.monomials().end(), h.exponents,
            [](const Monomial& m, const std::vector<unsigned>& e) { return m.exponents < e; });
        if (it != g.monomials().end() && it->exponents == h.exponents && it->coeff >= h.coeff)
            continue;
        std::vector<LinearInequality> strict;
        strict.reserve(g.monomials().size());
        for (const auto& other : g.monomials())
            strict.push_back(monomial_gap(h, other, true));
        LPOutcome out = solve_strict_feasibility(strict, weak, f.arity());
        if (out.feasible) return std::move(out.witness);
    }
    return std::nullopt;
}

inline std::vector<TropScalar> rational_point(const RatVec& w) {
    std::vector<TropScalar> point;
    point.reserve(w.size());
    for (const auto& q : w) point.emplace_back(q);
    return point;
}

}  // namespace detail

/// Without a region: equality of essential parts, the unique canonical
/// representatives. With a region: direct function equality on the region,
/// decided by two-sided per-monomial dominance LPs (relative essential parts
/// need not be unique on region boundaries, so no canonicalization is used).
/// Distinct verdicts carry an exact rational witness and both values there.
inline PolyEquiv e_equivalent(const TropPoly& f, const TropPoly& g,
                              const Region* region = nullptr) {
    if (f.arity() != g.arity()) throw std::invalid_argument("e_equivalent: arity mismatch");
    detail::check_region(f, region, "e_equivalent");

    std::optional<RatVec> w;
    if (!region) {
        if (essential_part(f) == essential_part(g)) return PolyEquiv{true, {}, {}, {}};
        w = detail::dominance_witness(f, g, nullptr);
        if (!w) w = detail::dominance_witness(g, f, nullptr);
        if (!w) throw std::logic_error("e_equivalent: distinct essential parts but no witness");
    } else {
        w = detail::dominance_witness(f, g, region);
        if (!w) w = detail::dominance_witness(g, f, region);
        if (!w) return PolyEquiv{true, {}, {}, {}};
    }
    auto point = detail::rational_point(*w);
    return PolyEquiv{false, std::move(*w), eval(f, point), eval(g, point)};
}

}  // namespace tropid
