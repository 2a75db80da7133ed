/// The matrix semiring M_n(T): products, permanent, adjoint, nabla inverse,
/// multiplicative trace, singularity and rank tests, submonoid predicates,
/// and the total generalized inverse on 2x2 matrices.
#pragma once

#include <tropid/poly.hpp>
#include <tropid/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tropid {

namespace detail {

template <class E>
struct tropical_ops;

template <>
struct tropical_ops<TropScalar> {
    static TropScalar add(const TropScalar& a, const TropScalar& b) { return oplus(a, b); }
    static TropScalar mul(const TropScalar& a, const TropScalar& b) { return odot(a, b); }
    static TropScalar zero_like(const TropScalar&) { return TropScalar::neg_infinity(); }
    static TropScalar one_like(const TropScalar&) { return TropScalar::one(); }
    static TropScalar scale(const TropScalar& a, const TropScalar& alpha) {
        return odot(alpha, a);
    }
};

template <>
struct tropical_ops<TropPoly> {
    static TropPoly add(const TropPoly& a, const TropPoly& b) { return padd(a, b); }
    static TropPoly mul(const TropPoly& a, const TropPoly& b) { return pmul(a, b); }
    static TropPoly zero_like(const TropPoly& proto) { return TropPoly(proto.arity()); }
    static TropPoly one_like(const TropPoly& proto) {
        return TropPoly::constant(proto.arity(), TropScalar::one());
    }
    static TropPoly scale(const TropPoly& a, const TropScalar& alpha) {
        return pmul(TropPoly::constant(a.arity(), alpha), a);
    }
};

}  // namespace detail

/// Square matrix over E, where E is TropScalar or TropPoly.
template <class E>
class TropMatrix {
public:
    TropMatrix(std::size_t n, const E& fill) : n_(n), e_(n * n, fill) {
        if (n == 0) throw std::invalid_argument("TropMatrix: dimension must be positive");
    }

    explicit TropMatrix(std::vector<std::vector<E>> rows) {
        n_ = rows.size();
        if (n_ == 0) throw std::invalid_argument("TropMatrix: dimension must be positive");
        for (const auto& row : rows) {
            if (row.size() != n_) throw std::invalid_argument("TropMatrix: not square");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    std::size_t dim() const { return n_; }
    const E& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    E& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const TropMatrix& a, const TropMatrix& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<E> e_;
};

using ScalarMatrix = TropMatrix<TropScalar>;
using PolyMatrix = TropMatrix<TropPoly>;

template <class E>
TropMatrix<E> identity_like(const TropMatrix<E>& a) {
    using ops = detail::tropical_ops<E>;
    TropMatrix<E> r(a.dim(), ops::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < a.dim(); ++i) r.at(i, i) = ops::one_like(a.at(0, 0));
    return r;
}

inline ScalarMatrix scalar_identity(std::size_t n) {
    ScalarMatrix r(n, TropScalar::neg_infinity());
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = TropScalar::one();
    return r;
}

inline ScalarMatrix scalar_zero_matrix(std::size_t n) {
    return ScalarMatrix(n, TropScalar::neg_infinity());
}

template <class E>
TropMatrix<E> madd(const TropMatrix<E>& a, const TropMatrix<E>& b) {
    using ops = detail::tropical_ops<E>;
    if (a.dim() != b.dim()) throw std::invalid_argument("madd: dimension mismatch");
    TropMatrix<E> r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            r.at(i, j) = ops::add(a.at(i, j), b.at(i, j));
    return r;
}

template <class E>
TropMatrix<E> mmul(const TropMatrix<E>& a, const TropMatrix<E>& b) {
    using ops = detail::tropical_ops<E>;
    if (a.dim() != b.dim()) throw std::invalid_argument("mmul: dimension mismatch");
    const std::size_t n = a.dim();
    TropMatrix<E> r(n, ops::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            E acc = ops::mul(a.at(i, 0), b.at(0, j));
            for (std::size_t k = 1; k < n; ++k)
                acc = ops::add(acc, ops::mul(a.at(i, k), b.at(k, j)));
            r.at(i, j) = acc;
        }
    }
    return r;
}

template <class E>
TropMatrix<E> smul(const TropScalar& alpha, const TropMatrix<E>& a) {
    using ops = detail::tropical_ops<E>;
    TropMatrix<E> r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            r.at(i, j) = ops::scale(a.at(i, j), alpha);
    return r;
}

template <class E>
TropMatrix<E> mpow(const TropMatrix<E>& a, unsigned long k) {
    TropMatrix<E> acc = identity_like(a);
    TropMatrix<E> base = a;
    while (k > 0) {
        if (k & 1UL) acc = mmul(acc, base);
        k >>= 1UL;
        if (k > 0) base = mmul(base, base);
    }
    return acc;
}

template <class E>
TropMatrix<E> transpose(const TropMatrix<E>& a) {
    TropMatrix<E> r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            r.at(i, j) = a.at(j, i);
    return r;
}

struct PermanentResult {
    TropScalar value;
    unsigned long attaining = 0;  // number of permutations achieving the value
};

/// Max over permutations of the diagonal-product weight, by enumeration
/// (n <= 8), together with the exact count of attaining permutations. When
/// every permutation hits a -inf entry the value is -inf and all
/// permutations attain it.
inline PermanentResult permanent_with_count(const ScalarMatrix& a) {
    if (a.dim() > 8) throw std::invalid_argument("permanent: dimension guard exceeded (n <= 8)");
    std::vector<std::size_t> perm(a.dim());
    std::iota(perm.begin(), perm.end(), 0);
    PermanentResult res{TropScalar::neg_infinity(), 0};
    do {
        TropScalar w = TropScalar::one();
        for (std::size_t i = 0; i < a.dim() && !w.is_neg_infinity(); ++i)
            w = odot(w, a.at(i, perm[i]));
        if (w > res.value) {
            res.value = w;
            res.attaining = 1;
        } else if (w == res.value) {
            ++res.attaining;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

inline TropScalar permanent(const ScalarMatrix& a) { return permanent_with_count(a).value; }

/// Singular iff the permanent is attained by at least two permutations or
/// equals -inf.
inline bool is_singular(const ScalarMatrix& a) {
    PermanentResult r = permanent_with_count(a);
    return r.attaining >= 2 || r.value.is_neg_infinity();
}

inline bool has_full_rank(const ScalarMatrix& a) { return !is_singular(a); }

inline ScalarMatrix minor_matrix(const ScalarMatrix& a, std::size_t i, std::size_t j) {
    if (a.dim() < 2) throw std::invalid_argument("minor: dimension must be at least 2");
    ScalarMatrix r(a.dim() - 1, TropScalar::neg_infinity());
    for (std::size_t r_i = 0, s_i = 0; s_i < a.dim(); ++s_i) {
        if (s_i == i) continue;
        for (std::size_t r_j = 0, s_j = 0; s_j < a.dim(); ++s_j) {
            if (s_j == j) continue;
            r.at(r_i, r_j) = a.at(s_i, s_j);
            ++r_j;
        }
        ++r_i;
    }
    return r;
}

/// adj(A)[j][i] = |minor(A, i, j)|: the matrix of minor permanents, transposed.
inline ScalarMatrix adjoint(const ScalarMatrix& a) {
    ScalarMatrix r(a.dim(), TropScalar::neg_infinity());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            r.at(j, i) = permanent(minor_matrix(a, i, j));
    return r;
}

/// adj(A) with |A| tropically divided out of every entry; requires |A| finite.
inline ScalarMatrix nabla(const ScalarMatrix& a) {
    TropScalar det = permanent(a);
    if (det.is_neg_infinity())
        throw std::domain_error("nabla: permanent is -inf (use generalized_inverse)");
    ScalarMatrix r = adjoint(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            r.at(i, j) = odiv(r.at(i, j), det);
    return r;
}

/// Classical sum of the diagonal (the tropical product along it).
inline TropScalar mtrace(const ScalarMatrix& a) {
    TropScalar t = TropScalar::one();
    for (std::size_t i = 0; i < a.dim(); ++i) t = odot(t, a.at(i, i));
    return t;
}

namespace detail {

inline TropScalar neg_or_inf(const TropScalar& a) {
    if (a.is_neg_infinity()) return TropScalar::neg_infinity();
    return TropScalar(Rat(-a.rat()));
}

}  // namespace detail

/// Total generalized inverse on M_2: the nabla quotient when the permanent
/// is finite, otherwise the patterned inverse matching A's -inf row or
/// column, with finite entries negated and -inf entries kept.
inline ScalarMatrix generalized_inverse(const ScalarMatrix& a) {
    if (a.dim() != 2) throw std::invalid_argument("generalized_inverse: requires n = 2");
    if (!permanent(a).is_neg_infinity()) return nabla(a);
    const TropScalar ninf = TropScalar::neg_infinity();
    ScalarMatrix g(2, ninf);
    if (a.at(1, 0).is_neg_infinity() && a.at(1, 1).is_neg_infinity()) {
        g.at(0, 0) = detail::neg_or_inf(a.at(0, 0));
        g.at(1, 0) = detail::neg_or_inf(a.at(0, 1));
    } else if (a.at(0, 0).is_neg_infinity() && a.at(0, 1).is_neg_infinity()) {
        g.at(0, 1) = detail::neg_or_inf(a.at(1, 0));
        g.at(1, 1) = detail::neg_or_inf(a.at(1, 1));
    } else if (a.at(0, 1).is_neg_infinity() && a.at(1, 1).is_neg_infinity()) {
        g.at(0, 0) = detail::neg_or_inf(a.at(0, 0));
        g.at(0, 1) = detail::neg_or_inf(a.at(1, 0));
    } else if (a.at(0, 0).is_neg_infinity() && a.at(1, 0).is_neg_infinity()) {
        g.at(1, 0) = detail::neg_or_inf(a.at(0, 1));
        g.at(1, 1) = detail::neg_or_inf(a.at(1, 1));
    } else {
        throw std::logic_error("generalized_inverse: -inf permanent without -inf row/column");
    }
    return g;
}

/// Symmetric about the anti-diagonal: a[i][j] = a[n-1-j][n-1-i].
inline bool is_presymmetric(const ScalarMatrix& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j) != a.at(n - 1 - j, n - 1 - i)) return false;
    return true;
}

inline bool is_bisymmetric(const ScalarMatrix& a) {
    if (!is_presymmetric(a)) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

struct SubmonoidFlags {
    bool upper_triangular = false;
    bool lower_triangular = false;
    bool diagonal = false;
    bool permutation = false;    // the Weyl group: group of units of M_n(T)
    bool n2_idempotent = false;  // zero diagonal, off-diagonal entries <= 0
};

inline SubmonoidFlags classify_submonoid(const ScalarMatrix& a) {
    const std::size_t n = a.dim();
    SubmonoidFlags f;
    f.upper_triangular = true;
    f.lower_triangular = true;
    f.permutation = true;
    f.n2_idempotent = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t row_fin = 0, col_fin = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j).is_finite()) ++row_fin;
            if (a.at(j, i).is_finite()) ++col_fin;
            if (i > j && a.at(i, j).is_finite()) f.upper_triangular = false;
            if (i < j && a.at(i, j).is_finite()) f.lower_triangular = false;
            if (i == j) {
                if (a.at(i, j) != TropScalar::one()) f.n2_idempotent = false;
            } else if (a.at(i, j) > TropScalar::one()) {
                f.n2_idempotent = false;
            }
        }
        if (row_fin != 1 || col_fin != 1) f.permutation = false;
    }
    f.diagonal = f.upper_triangular && f.lower_triangular;
    return f;
}

}  // namespace tropid
