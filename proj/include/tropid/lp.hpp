/// Exact rational linear-program feasibility for systems mixing strict and
/// weak inequalities, plus a Fourier-Motzkin cross-check oracle.
#pragma once

#include <tropid/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropid {

/// coeffs . x + constant >= 0 (weak) or > 0 (strict).
struct LinearInequality {
    RatVec coeffs;
    Rat constant;
    bool strict = false;
};

struct LPOutcome {
    bool feasible = false;
    RatVec witness;  // length m when feasible
    Rat margin;      // > 0 when feasible; strict rows hold with at least this slack
};

namespace detail {

/// Dictionary-form simplex over exact rationals. Rows express basic
/// variables as affine functions of the nonbasic columns; entries stay in
/// lowest terms through GMP arithmetic. Dantzig pricing switches to Bland's
/// rule after a pivot budget, which guards against cycling.
class Simplex {
public:
    Simplex(std::size_t nrows, std::size_t ncols)
        : rows_(nrows), cols_(ncols), d_(nrows, RatVec(ncols + 1)),
          row_var_(nrows), col_var_(ncols), z_(ncols + 1) {}

    RatVec& row(std::size_t i) { return d_[i]; }
    std::size_t& row_var(std::size_t i) { return row_var_[i]; }
    std::size_t& col_var(std::size_t j) { return col_var_[j]; }
    RatVec& objective() { return z_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t l, std::size_t e) {
        Rat piv = d_[l][1 + e];
        if (piv == 0) throw std::logic_error("simplex: zero pivot");
        RatVec& rl = d_[l];
        for (std::size_t k = 0; k <= cols_; ++k) rl[k] = -rl[k] / piv;
        rl[1 + e] = Rat(1) / piv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == l) continue;
            apply_substitution(d_[i], rl, e);
        }
        apply_substitution(z_, rl, e);
        std::swap(row_var_[l], col_var_[e]);
        ++pivots_;
    }

    /// Maximizes the current objective; the caller guarantees boundedness.
    void optimize() {
        for (;;) {
            std::size_t e = cols_;
            if (pivots_ < kBlandAfter) {
                Rat best;
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (z_[1 + j] > 0 && (e == cols_ || z_[1 + j] > best)) {
                        best = z_[1 + j];
                        e = j;
                    }
                }
            } else {
                std::size_t best_id = 0;
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (z_[1 + j] > 0 && (e == cols_ || col_var_[j] < best_id)) {
                        best_id = col_var_[j];
                        e = j;
                    }
                }
            }
            if (e == cols_) return;
            std::size_t l = rows_;
            Rat best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (d_[i][1 + e] >= 0) continue;
                Rat ratio = -d_[i][0] / d_[i][1 + e];
                if (l == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && row_var_[i] < row_var_[l])) {
                    best_ratio = ratio;
                    l = i;
                }
            }
            if (l == rows_) throw std::logic_error("simplex: unbounded objective");
            pivot(l, e);
            if (pivots_ > kPivotCap) throw std::logic_error("simplex: pivot cap hit");
        }
    }

    void drop_column(std::size_t j) {
        for (auto& r : d_) r.erase(r.begin() + 1 + j);
        z_.erase(z_.begin() + 1 + j);
        col_var_.erase(col_var_.begin() + j);
        --cols_;
    }

    void drop_row(std::size_t i) {
        d_.erase(d_.begin() + i);
        row_var_.erase(row_var_.begin() + i);
        --rows_;
    }

    std::optional<std::size_t> column_of(std::size_t var) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (col_var_[j] == var) return j;
        return std::nullopt;
    }

    std::optional<std::size_t> row_of(std::size_t var) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (row_var_[i] == var) return i;
        return std::nullopt;
    }

    Rat value_of(std::size_t var) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (row_var_[i] == var) return d_[i][0];
        return Rat(0);
    }

private:
    static void apply_substitution(RatVec& target, const RatVec& newrow, std::size_t e) {
        Rat f = target[1 + e];
        if (f == 0) return;
        target[1 + e] = 0;
        for (std::size_t k = 0; k < newrow.size(); ++k) {
            if (newrow[k] != 0) target[k] += f * newrow[k];
        }
    }

    static constexpr unsigned long kBlandAfter = 5000;
    static constexpr unsigned long kPivotCap = 10000000;

    std::size_t rows_, cols_;
    std::vector<RatVec> d_;
    std::vector<std::size_t> row_var_;
    std::vector<std::size_t> col_var_;
    RatVec z_;
    unsigned long pivots_ = 0;
};

inline void check_dimensions(const std::vector<LinearInequality>& v, std::size_t m,
                             const char* who) {
    for (const auto& ineq : v)
        if (ineq.coeffs.size() != m)
            throw std::invalid_argument(std::string(who) + ": inequality dimension mismatch");
}

}  // namespace detail

/// Decides whether some x in Q^m satisfies every weak inequality and every
/// strict inequality strictly. Maximizes t subject to (strict lhs) >= t,
/// (weak lhs) >= 0 and t <= 1; the system is strictly feasible iff the
/// optimum is positive, and the optimum then bounds the strict slack.
/// Free variables are split as x = p - q with p, q >= 0 and t >= 0, which
/// preserves the verdict: any strictly feasible x yields t = min(slack, 1).
inline LPOutcome solve_strict_feasibility(const std::vector<LinearInequality>& strict,
                                          const std::vector<LinearInequality>& weak,
                                          std::size_t m) {
    detail::check_dimensions(strict, m, "solve_strict_feasibility");
    detail::check_dimensions(weak, m, "solve_strict_feasibility");

    const std::size_t nstruct = 2 * m + 1;  // p_1..p_m, q_1..q_m, t
    const std::size_t t_var = 2 * m;
    const std::size_t nrows = strict.size() + weak.size() + 1;

    detail::Simplex sx(nrows, nstruct);
    for (std::size_t j = 0; j < nstruct; ++j) sx.col_var(j) = j;

    std::size_t r = 0;
    bool negative_const = false;
    auto add_row = [&](const LinearInequality& ineq) {
        RatVec& row = sx.row(r);
        row[0] = ineq.constant;
        if (ineq.constant < 0) negative_const = true;
        for (std::size_t j = 0; j < m; ++j) {
            row[1 + j] = ineq.coeffs[j];
            row[1 + m + j] = -ineq.coeffs[j];
        }
        if (ineq.strict) row[1 + t_var] = -1;
        sx.row_var(r) = nstruct + r;
        ++r;
    };
    for (const auto& ineq : strict) add_row(ineq);
    for (const auto& ineq : weak) add_row(ineq);
    {
        RatVec& cap = sx.row(r);
        cap[0] = 1;
        cap[1 + t_var] = -1;
        sx.row_var(r) = nstruct + r;
        ++r;
    }

    if (negative_const) {
        // Phase I with a single auxiliary column: one special pivot makes the
        // dictionary feasible, then the auxiliary objective is driven to zero.
        const std::size_t aux_var = nstruct + nrows;
        detail::Simplex ph(nrows, nstruct + 1);
        for (std::size_t j = 0; j < nstruct; ++j) ph.col_var(j) = j;
        ph.col_var(nstruct) = aux_var;
        for (std::size_t i = 0; i < nrows; ++i) {
            RatVec& src = sx.row(i);
            RatVec& dst = ph.row(i);
            for (std::size_t k = 0; k <= nstruct; ++k) dst[k] = src[k];
            dst[1 + nstruct] = 1;
            ph.row_var(i) = sx.row_var(i);
        }
        ph.objective()[1 + nstruct] = -1;
        std::size_t worst = 0;
        for (std::size_t i = 1; i < nrows; ++i)
            if (ph.row(i)[0] < ph.row(worst)[0]) worst = i;
        ph.pivot(worst, nstruct);
        ph.optimize();
        if (ph.objective()[0] < 0) return LPOutcome{};
        if (auto ar = ph.row_of(aux_var)) {
            std::size_t i = *ar;
            std::size_t e = ph.cols();
            for (std::size_t j = 0; j < ph.cols(); ++j)
                if (ph.row(i)[1 + j] != 0) { e = j; break; }
            if (e == ph.cols()) {
                ph.drop_row(i);
            } else {
                ph.pivot(i, e);
            }
        }
        if (auto ac = ph.column_of(aux_var)) ph.drop_column(*ac);
        sx = ph;
    }

    // Phase II: maximize t.
    RatVec& z = sx.objective();
    std::fill(z.begin(), z.end(), Rat(0));
    if (auto tc = sx.column_of(t_var)) {
        z[1 + *tc] = 1;
    } else if (auto tr = sx.row_of(t_var)) {
        z = sx.row(*tr);
    }
    sx.optimize();

    Rat t_opt = sx.value_of(t_var);
    if (!(t_opt > 0)) return LPOutcome{};

    LPOutcome out;
    out.feasible = true;
    out.margin = t_opt;
    out.witness.resize(m);
    for (std::size_t j = 0; j < m; ++j)
        out.witness[j] = sx.value_of(j) - sx.value_of(m + j);
    return out;
}

namespace detail {

inline std::string fm_key(const RatVec& coeffs, const Rat& constant, bool strict) {
    std::string k = strict ? "s" : "w";
    for (const auto& c : coeffs) {
        k += c.get_str();
        k += ',';
    }
    k += constant.get_str();
    return k;
}

}  // namespace detail

/// Fourier-Motzkin elimination deciding the same strict-feasibility question
/// as solve_strict_feasibility; used as an independent oracle. A combined
/// inequality is strict iff either parent is strict. Dimension is capped at 8
/// to guard against combinatorial blowup.
inline bool fm_eliminate(const std::vector<LinearInequality>& weak,
                         const std::vector<LinearInequality>& strict,
                         std::size_t m) {
    if (m > 8) throw std::invalid_argument("fm_eliminate: dimension guard exceeded (m <= 8)");
    detail::check_dimensions(weak, m, "fm_eliminate");
    detail::check_dimensions(strict, m, "fm_eliminate");

    std::vector<LinearInequality> cons;
    cons.reserve(weak.size() + strict.size());
    for (const auto& c : strict) cons.push_back(c);
    for (const auto& c : weak) cons.push_back(c);

    for (std::size_t k = m; k-- > 0;) {
        std::vector<LinearInequality> pos, neg, next;
        for (auto& c : cons) {
            if (c.coeffs[k] > 0) pos.push_back(std::move(c));
            else if (c.coeffs[k] < 0) neg.push_back(std::move(c));
            else next.push_back(std::move(c));
        }
        std::map<std::string, bool> seen;
        for (auto& c : next) {
            c.coeffs.resize(k);
            seen[detail::fm_key(c.coeffs, c.constant, c.strict)] = true;
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                LinearInequality c;
                c.strict = p.strict || n.strict;
                Rat fp = -n.coeffs[k];
                Rat fn = p.coeffs[k];
                c.coeffs.resize(k);
                for (std::size_t j = 0; j < k; ++j)
                    c.coeffs[j] = fp * p.coeffs[j] + fn * n.coeffs[j];
                c.constant = fp * p.constant + fn * n.constant;
                Rat scale(0);
                for (const auto& v : c.coeffs)
                    if (v != 0) { scale = abs(v); break; }
                if (scale == 0 && c.constant != 0) scale = abs(c.constant);
                if (scale != 0) {
                    for (auto& v : c.coeffs) v /= scale;
                    c.constant /= scale;
                }
                std::string key = detail::fm_key(c.coeffs, c.constant, c.strict);
                if (!seen.count(key)) {
                    seen[key] = true;
                    next.push_back(std::move(c));
                }
                if (next.size() > 500000)
                    throw std::runtime_error("fm_eliminate: constraint blowup guard");
            }
        }
        cons = std::move(next);
    }

    for (const auto& c : cons) {
        if (c.strict ? !(c.constant > 0) : !(c.constant >= 0)) return false;
    }
    return true;
}

}  // namespace tropid
