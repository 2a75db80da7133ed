/// Exact arithmetic for the tropical semiring T = Q u {-inf}:
/// addition is max, multiplication is classical +.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropid {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Builds a rational in lowest terms with positive denominator.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Element of T = Q u {-inf}. The -inf variant is a distinguished state,
/// never a sentinel rational; finite values are kept in lowest terms with
/// positive denominator (GMP canonical form).
class TropScalar {
public:
    TropScalar() : finite_(false) {}
    explicit TropScalar(long n) : finite_(true), q_(n) {}
    explicit TropScalar(const Rat& q) : finite_(true), q_(q) {
        q_.canonicalize();
    }

    static TropScalar neg_infinity() { return TropScalar(); }
    /// Additive identity (-inf).
    static TropScalar zero() { return TropScalar(); }
    /// Multiplicative identity (the rational 0).
    static TropScalar one() { return TropScalar(0L); }
    static TropScalar rational(long num, long den) {
        return TropScalar(make_rat(num, den));
    }

    bool is_finite() const { return finite_; }
    bool is_neg_infinity() const { return !finite_; }

    const Rat& rat() const {
        if (!finite_) throw std::domain_error("TropScalar::rat on -inf");
        return q_;
    }

    friend bool operator==(const TropScalar& a, const TropScalar& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.q_ == b.q_;
    }
    friend bool operator!=(const TropScalar& a, const TropScalar& b) {
        return !(a == b);
    }
    /// Total order with -inf as the least element.
    friend bool operator<(const TropScalar& a, const TropScalar& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.q_ < b.q_;
    }
    friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
    friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
    friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

private:
    bool finite_;
    Rat q_;
};

/// a (+) b = max{a, b}.
inline TropScalar oplus(const TropScalar& a, const TropScalar& b) {
    return a < b ? b : a;
}

/// a (*) b = a + b, with -inf absorbing.
inline TropScalar odot(const TropScalar& a, const TropScalar& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return TropScalar::neg_infinity();
    return TropScalar(Rat(a.rat() + b.rat()));
}

/// a^k = k*a classically; a^0 is the tropical one, including (-inf)^0 = 0.
inline TropScalar opow(const TropScalar& a, unsigned long k) {
    if (k == 0) return TropScalar::one();
    if (a.is_neg_infinity()) return TropScalar::neg_infinity();
    return TropScalar(Rat(a.rat() * static_cast<unsigned long>(k)));
}

/// a / b = a - b classically; division by -inf is rejected.
inline TropScalar odiv(const TropScalar& a, const TropScalar& b) {
    if (b.is_neg_infinity()) throw std::domain_error("odiv: division by -inf");
    if (a.is_neg_infinity()) return TropScalar::neg_infinity();
    return TropScalar(Rat(a.rat() - b.rat()));
}

}  // namespace tropid
