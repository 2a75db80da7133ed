/// Words over a finite alphabet of uppercase letters and semigroup
/// identities as pairs of words asserted equal.
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace tropid {

/// Nonempty sequence of uppercase letters.
struct Word {
    std::string letters;

    explicit Word(std::string ls) : letters(std::move(ls)) {
        if (letters.empty()) throw std::invalid_argument("Word: must be nonempty");
        for (char c : letters)
            if (c < 'A' || c > 'Z')
                throw std::invalid_argument("Word: letters must be uppercase A-Z");
    }

    std::size_t count(char letter) const {
        return static_cast<std::size_t>(
            std::count(letters.begin(), letters.end(), letter));
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

/// Formal equality of two words over the same alphabet.
struct Identity {
    Word lhs;
    Word rhs;

    std::set<char> alphabet() const {
        std::set<char> s(lhs.letters.begin(), lhs.letters.end());
        s.insert(rhs.letters.begin(), rhs.letters.end());
        return s;
    }
};

/// Rewrites every occurrence of the given letter as a block of `power`
/// copies of itself (A -> A^power).
inline Word double_letters(const Word& w, unsigned power) {
    std::string out;
    out.reserve(w.letters.size() * power);
    for (char c : w.letters) out.append(power, c);
    return Word(out);
}

}  // namespace tropid
