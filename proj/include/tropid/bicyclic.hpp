/// The bicyclic monoid B = <a, b | ab = 1> with normal forms b^i a^j, its
/// composition law, and its faithful upper-triangular tropical
/// representation.
#pragma once

#include <tropid/matrix.hpp>
#include <tropid/scalar.hpp>
#include <tropid/word.hpp>

#include <stdexcept>
#include <string>

namespace tropid {

/// Normal form b^i a^j.
struct BicyclicElem {
    unsigned long i = 0;
    unsigned long j = 0;

    friend bool operator==(const BicyclicElem&, const BicyclicElem&) = default;
};

/// Composition of normal forms: (b^i a^j)(b^h a^k) cancels the middle a^j
/// b^h pair by pair.
inline BicyclicElem star(const BicyclicElem& x, const BicyclicElem& y) {
    if (x.j <= y.i) return BicyclicElem{x.i + (y.i - x.j), y.j};
    return BicyclicElem{x.i, (x.j - y.i) + y.j};
}

/// Reduces a word in the generators (characters 'a' and 'b') to its normal
/// form by cancelling every adjacent "ab" pair.
inline BicyclicElem reduce_word(const std::string& w) {
    BicyclicElem acc;  // identity: b^0 a^0
    for (char c : w) {
        if (c == 'a') {
            acc.j += 1;
        } else if (c == 'b') {
            acc = star(acc, BicyclicElem{1, 0});
        } else {
            throw std::invalid_argument("reduce_word: expected letters 'a' and 'b'");
        }
    }
    return acc;
}

/// Faithful representation b^i a^j -> [[i - j, i + j], [-inf, j - i]]; the
/// image is upper triangular with the (1,1) entry negated in the (2,2)
/// entry and the (1,2) entry dominating both.
inline ScalarMatrix represent(const BicyclicElem& x) {
    long i = static_cast<long>(x.i);
    long j = static_cast<long>(x.j);
    ScalarMatrix m(2, TropScalar::neg_infinity());
    m.at(0, 0) = TropScalar(i - j);
    m.at(0, 1) = TropScalar(i + j);
    m.at(1, 1) = TropScalar(j - i);
    return m;
}

/// Evaluates both sides of the Adjan identity xy²x xy xy²x = xy²x yx xy²x
/// at the given pair via star and returns whether they agree.
inline bool check_adjan_on_B(const BicyclicElem& x, const BicyclicElem& y) {
    auto fold = [&](const std::string& w) {
        BicyclicElem acc = (w[0] == 'x') ? x : y;
        for (std::size_t t = 1; t < w.size(); ++t) acc = star(acc, (w[t] == 'x') ? x : y);
        return acc;
    };
    return fold("xyyxxyxyyx") == fold("xyyxyxxyyx");
}

}  // namespace tropid
