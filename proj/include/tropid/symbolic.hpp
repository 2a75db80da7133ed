/// Matrices over tropical polynomials: word evaluation in matrix monoids,
/// the substitution homomorphism, and entrywise e-equivalence of symbolic
/// matrices.
#pragma once

#include <tropid/matrix.hpp>
#include <tropid/poly.hpp>
#include <tropid/word.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>

namespace tropid {

using ScalarAssignment = std::map<char, ScalarMatrix>;

/// Letter images as matrices of polynomials, all square of one dimension and
/// all entries of one arity.
struct SymbolicAssignment {
    std::map<char, PolyMatrix> images;

    std::size_t dim() const { return images.begin()->second.dim(); }
    std::size_t arity() const { return images.begin()->second.at(0, 0).arity(); }

    void validate() const {
        if (images.empty()) throw std::invalid_argument("SymbolicAssignment: empty");
        const std::size_t n = dim();
        const std::size_t m = arity();
        for (const auto& [letter, mat] : images) {
            if (mat.dim() != n)
                throw std::invalid_argument("SymbolicAssignment: dimension mismatch");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (mat.at(i, j).arity() != m)
                        throw std::invalid_argument("SymbolicAssignment: arity mismatch");
        }
    }
};

namespace detail {

template <class M, class A>
M fold_word(const Word& word, const A& assignment) {
    auto lookup = [&](char letter) -> const M& {
        auto it = assignment.find(letter);
        if (it == assignment.end())
            throw std::invalid_argument(std::string("unbound letter: ") + letter);
        return it->second;
    };
    M acc = lookup(word.letters[0]);
    for (std::size_t i = 1; i < word.letters.size(); ++i)
        acc = mmul(acc, lookup(word.letters[i]));
    return acc;
}

}  // namespace detail

/// Left-to-right tropical product of the letter images.
inline ScalarMatrix evaluate_word(const Word& word, const ScalarAssignment& assignment) {
    return detail::fold_word<ScalarMatrix>(word, assignment);
}

/// Product over the polynomial semiring. Entries come back merged and
/// sorted but NOT essentialized; essentialization is a terminal, explicit
/// step for the caller.
inline PolyMatrix evaluate_word_symbolic(const Word& word, const SymbolicAssignment& assignment) {
    return detail::fold_word<PolyMatrix>(word, assignment.images);
}

/// Entrywise evaluation at a point (the induced substitution homomorphism).
inline ScalarMatrix substitute(const PolyMatrix& m, const std::vector<TropScalar>& point) {
    ScalarMatrix r(m.dim(), TropScalar::neg_infinity());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            r.at(i, j) = eval(m.at(i, j), point);
    return r;
}

struct MatrixEquiv {
    bool equivalent = false;
    std::size_t row = 0, col = 0;  // offending entry when distinct
    PolyEquiv entry;
};

/// Entrywise e-equivalence; the overall verdict is Equivalent iff every
/// entry is. Distinct verdicts carry the offending entry and its witness.
inline MatrixEquiv matrices_e_equivalent(const PolyMatrix& m, const PolyMatrix& n,
                                         const Region* region = nullptr) {
    if (m.dim() != n.dim())
        throw std::invalid_argument("matrices_e_equivalent: dimension mismatch");
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            PolyEquiv e = e_equivalent(m.at(i, j), n.at(i, j), region);
            if (!e.equivalent) return MatrixEquiv{false, i, j, std::move(e)};
        }
    }
    return MatrixEquiv{true, 0, 0, {}};
}

}  // namespace tropid
