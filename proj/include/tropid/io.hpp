/// Text formats shared by the library and the CLI: scalars ("-inf",
/// integers, "p/q"), matrices ("[[0,1],[-inf,2]]"), polynomials
/// ("2*x1^2*x2 + -1/3*x2 + 0"), region files ("x3 >= x1 + x2" per line),
/// words ("A B^2 A"), identities ("lhs = rhs"), and bicyclic elements
/// ("(i,j)" or "b^i a^j"). Parse failures carry line and column.
#pragma once

#include <tropid/bicyclic.hpp>
#include <tropid/lp.hpp>
#include <tropid/matrix.hpp>
#include <tropid/poly.hpp>
#include <tropid/scalar.hpp>
#include <tropid/word.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropid {

struct ParseError : std::runtime_error {
    std::string message;
    std::size_t line, column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + what),
          message(what),
          line(line_),
          column(column_) {}
};

namespace detail {

class Cursor {
  public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    char get() {
        if (done()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
            get();
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool consume(char c) {
        skip_ws();
        if (peek() != c) return false;
        get();
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    unsigned long parse_unsigned() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        unsigned long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + static_cast<unsigned long>(get() - '0');
        return v;
    }

    Rat parse_rational() {
        skip_ws();
        std::string tok;
        if (peek() == '-' || peek() == '+') tok += get();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) tok += get();
        if (peek() == '/') {
            tok += get();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a denominator");
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) tok += get();
        }
        Rat q(tok);
        if (q.get_den() == 0) fail("zero denominator");
        q.canonicalize();
        return q;
    }

    /// "-inf" or a rational.
    TropScalar parse_scalar() {
        skip_ws();
        if (peek() == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'i') {
            for (char c : {'-', 'i', 'n', 'f'}) {
                if (peek() != c) fail("expected '-inf'");
                get();
            }
            return TropScalar::neg_infinity();
        }
        return TropScalar(parse_rational());
    }

    /// x<i> with i >= 1; returns the zero-based index.
    std::size_t parse_variable() {
        skip_ws();
        if (peek() != 'x') fail("expected a variable x<i>");
        get();
        unsigned long idx = parse_unsigned();
        if (idx == 0) fail("variable indices start at x1");
        return static_cast<std::size_t>(idx - 1);
    }

    void expect_done(const std::string& what) {
        skip_ws();
        if (!done()) fail("unexpected trailing input in " + what);
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

}  // namespace detail

inline TropScalar parse_scalar(const std::string& text) {
    detail::Cursor c(text);
    TropScalar v = c.parse_scalar();
    c.expect_done("scalar");
    return v;
}

inline ScalarMatrix parse_matrix(const std::string& text) {
    detail::Cursor c(text);
    c.expect('[');
    std::vector<std::vector<TropScalar>> rows;
    do {
        c.expect('[');
        std::vector<TropScalar> row;
        do {
            row.push_back(c.parse_scalar());
        } while (c.consume(','));
        c.expect(']');
        rows.push_back(std::move(row));
    } while (c.consume(','));
    c.expect(']');
    c.expect_done("matrix");
    for (const auto& row : rows)
        if (row.size() != rows.size())
            throw ParseError("matrix is not square", 1, 1);
    return ScalarMatrix(rows);
}

/// Terms joined by '+'; term = coefficient, optionally followed by
/// '*x<i>^<e>' factors. The arity is max(min_arity, highest variable
/// index). "-inf" denotes the empty polynomial.
inline TropPoly parse_poly(const std::string& text, std::size_t min_arity = 0) {
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed == "-inf") return TropPoly(min_arity);
    detail::Cursor c(text);
    struct RawTerm {
        Rat coeff;
        std::map<std::size_t, unsigned> powers;
    };
    std::vector<RawTerm> terms;
    std::size_t arity = min_arity;
    do {
        RawTerm t;
        t.coeff = c.parse_rational();
        while (c.consume('*')) {
            std::size_t idx = c.parse_variable();
            unsigned exp = 1;
            if (c.consume('^')) exp = static_cast<unsigned>(c.parse_unsigned());
            t.powers[idx] += exp;
            arity = std::max(arity, idx + 1);
        }
        terms.push_back(std::move(t));
    } while (c.consume('+'));
    c.expect_done("polynomial");

    std::vector<Monomial> monos;
    monos.reserve(terms.size());
    for (const auto& t : terms) {
        Monomial m;
        m.exponents.assign(arity, 0);
        for (const auto& [idx, exp] : t.powers) m.exponents[idx] = exp;
        m.coeff = t.coeff;
        monos.push_back(std::move(m));
    }
    return TropPoly(arity, std::move(monos));
}

/// One inequality per line: `<linear-expr> >= <linear-expr>` over x1..xm;
/// blank lines and lines starting with '#' are skipped. Linear terms are
/// rationals, variables, or `<rational>*x<i>`, combined with '+' and '-'.
inline std::vector<LinearInequality> parse_region_lines(const std::string& text,
                                                        std::size_t arity) {
    std::vector<LinearInequality> out;
    std::istringstream stream(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(stream, raw)) {
        ++lineno;
        std::string lstr = raw;
        std::size_t first = lstr.find_first_not_of(" \t\r");
        if (first == std::string::npos || lstr[first] == '#') continue;

        std::size_t rel = lstr.find(">=");
        if (rel == std::string::npos) throw ParseError("expected '>='", lineno, 1);

        auto parse_side = [&](const std::string& side, Rat sign_base) {
            detail::Cursor c(side);
            RatVec coeffs(arity, Rat(0));
            Rat constant(0);
            Rat sign = sign_base;
            bool first_term = true;
            while (true) {
                c.skip_ws();
                if (c.done()) {
                    if (first_term) c.fail("empty expression");
                    break;
                }
                if (!first_term) {
                    if (c.consume('+')) {
                    } else if (c.consume('-')) {
                        sign = -sign_base;
                    } else {
                        c.fail("expected '+' or '-'");
                    }
                } else if (c.consume('-')) {
                    sign = -sign_base;
                }
                c.skip_ws();
                Rat mag(1);
                bool have_coeff = false;
                if (c.peek() != 'x') {
                    mag = c.parse_rational();
                    have_coeff = true;
                }
                c.skip_ws();
                bool have_var = false;
                if (have_coeff ? c.consume('*') : false) have_var = true;
                if (!have_var && c.peek() == 'x' && !have_coeff) have_var = true;
                if (have_var) {
                    std::size_t idx = c.parse_variable();
                    if (idx >= arity) c.fail("variable index exceeds the arity");
                    unsigned exp = 1;
                    if (c.consume('^')) exp = static_cast<unsigned>(c.parse_unsigned());
                    if (exp != 1) c.fail("region inequalities must be linear");
                    coeffs[idx] += sign * mag;
                } else {
                    constant += sign * mag;
                }
                sign = sign_base;
                first_term = false;
            }
            return std::pair<RatVec, Rat>(std::move(coeffs), constant);
        };

        try {
            auto [lc, lk] = parse_side(lstr.substr(0, rel), Rat(1));
            auto [rc, rk] = parse_side(lstr.substr(rel + 2), Rat(1));
            LinearInequality ineq;
            ineq.coeffs.resize(arity);
            for (std::size_t i = 0; i < arity; ++i) ineq.coeffs[i] = lc[i] - rc[i];
            ineq.constant = lk - rk;
            ineq.strict = false;
            out.push_back(std::move(ineq));
        } catch (const ParseError& e) {
            throw ParseError(e.message, lineno, e.column);
        }
    }
    return out;
}

/// Uppercase letters with optional ^k exponents, whitespace-insensitive.
inline Word parse_word(const std::string& text) {
    detail::Cursor c(text);
    std::string letters;
    c.skip_ws();
    while (!c.done()) {
        char l = c.peek();
        if (l < 'A' || l > 'Z') c.fail("expected an uppercase letter");
        c.get();
        unsigned long k = 1;
        if (c.consume('^')) {
            k = c.parse_unsigned();
            if (k == 0) c.fail("exponents must be positive");
        }
        letters.append(static_cast<std::size_t>(k), l);
        c.skip_ws();
    }
    if (letters.empty()) throw ParseError("empty word", 1, 1);
    return Word(letters);
}

inline Identity parse_identity(const std::string& text) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected '=' between the sides", 1, 1);
    if (text.find('=', eq + 1) != std::string::npos)
        throw ParseError("expected exactly one '='", 1, eq + 2);
    return Identity{parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1))};
}

/// "(i,j)" or "b^i a^j" (either generator may be omitted; bare letters mean
/// exponent 1).
inline BicyclicElem parse_bicyclic(const std::string& text) {
    detail::Cursor c(text);
    c.skip_ws();
    if (c.consume('(')) {
        unsigned long i = c.parse_unsigned();
        c.expect(',');
        unsigned long j = c.parse_unsigned();
        c.expect(')');
        c.expect_done("bicyclic element");
        return BicyclicElem{i, j};
    }
    unsigned long i = 0, j = 0;
    c.skip_ws();
    if (c.peek() == 'b') {
        c.get();
        i = c.consume('^') ? c.parse_unsigned() : 1;
    }
    c.skip_ws();
    if (c.peek() == 'a') {
        c.get();
        j = c.consume('^') ? c.parse_unsigned() : 1;
    }
    c.expect_done("bicyclic element");
    return BicyclicElem{i, j};
}

/// Word over the generators {a, b} with optional ^k exponents.
inline std::string parse_generator_word(const std::string& text) {
    detail::Cursor c(text);
    std::string out;
    c.skip_ws();
    while (!c.done()) {
        char l = c.peek();
        if (l != 'a' && l != 'b') c.fail("expected generator 'a' or 'b'");
        c.get();
        unsigned long k = 1;
        if (c.consume('^')) {
            k = c.parse_unsigned();
            if (k == 0) c.fail("exponents must be positive");
        }
        out.append(static_cast<std::size_t>(k), l);
        c.skip_ws();
    }
    return out;
}

inline std::string print_rational(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string print_scalar(const TropScalar& a) {
    return a.is_finite() ? print_rational(a.rat()) : "-inf";
}

inline std::string print_matrix(const ScalarMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += (i == 0 ? "[" : ",[");
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ",";
            out += print_scalar(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

/// Canonical polynomial text: monomials in descending lexicographic
/// exponent order, coefficients always printed, e.g. "0*x1^2 + 0";
/// the empty polynomial prints as "-inf".
inline std::string print_poly(const TropPoly& f) {
    if (f.is_neg_infinity()) return "-inf";
    std::string out;
    const auto& monos = f.monomials();
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += print_rational(it->coeff);
        for (std::size_t v = 0; v < it->exponents.size(); ++v) {
            if (it->exponents[v] == 0) continue;
            out += "*x" + std::to_string(v + 1);
            if (it->exponents[v] > 1) out += "^" + std::to_string(it->exponents[v]);
        }
    }
    return out;
}

/// Canonical word text with maximal blocks as ^k powers: "A B^2 A".
inline std::string print_word(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        char c = w.letters[i];
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == c) ++j;
        if (!out.empty()) out += " ";
        out += c;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string print_identity(const Identity& id) {
    return print_word(id.lhs) + " = " + print_word(id.rhs);
}

inline std::string print_bicyclic(const BicyclicElem& x) {
    return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

}  // namespace tropid
