#include <catch2/catch_amalgamated.hpp>
#include <tropid/word.hpp>

#include <stdexcept>

using namespace tropid;

TEST_CASE("words validate their letters") {
    CHECK(Word("ABBA").letters == "ABBA");
    CHECK_THROWS_AS(Word(""), std::invalid_argument);
    CHECK_THROWS_AS(Word("AbA"), std::invalid_argument);
    CHECK_THROWS_AS(Word("A B"), std::invalid_argument);
    CHECK_THROWS_AS(Word("A1"), std::invalid_argument);
}

TEST_CASE("letter counts") {
    Word w("ABBAABABBA");
    CHECK(w.count('A') == 5);
    CHECK(w.count('B') == 5);
    CHECK(w.count('C') == 0);
}

TEST_CASE("identities collect their alphabet from both sides") {
    Identity id{Word("AAB"), Word("BCA")};
    std::set<char> expect{'A', 'B', 'C'};
    CHECK(id.alphabet() == expect);
    Identity one{Word("A"), Word("AA")};
    CHECK(one.alphabet() == std::set<char>{'A'});
}

TEST_CASE("double_letters expands each letter into a block") {
    CHECK(double_letters(Word("AB"), 2) == Word("AABB"));
    CHECK(double_letters(Word("ABA"), 3) == Word("AAABBBAAA"));
    CHECK(double_letters(Word("ABBAABABBA"), 2) ==
          Word("AABBBBAAAABBAABBBBAA"));
    CHECK(double_letters(Word("AB"), 1) == Word("AB"));
}
