#include <doctest.h>

#include <stdexcept>

#include "cgflz/parsing.hpp"

using namespace cgflz;

TEST_CASE("verify_parsing accepts a valid distinct tiling") {
    auto x = make_sequence("010001", 2);
    Parsing p{{1, 2, 4, 6}, true, false};
    auto check = verify_parsing(x, p);
    CHECK(check.ok);
    CHECK(check.violation.empty());
}

TEST_CASE("verify_parsing rejects bad tilings with a reason") {
    auto x = make_sequence("0101", 2);
    CHECK_FALSE(verify_parsing(x, Parsing{{1, 3}, true, false}).ok);      // short cover
    CHECK_FALSE(verify_parsing(x, Parsing{{2, 2, 4}, true, false}).ok);   // not increasing
    CHECK_FALSE(verify_parsing(x, Parsing{{2, 5}, true, false}).ok);      // overruns n
    CHECK_FALSE(verify_parsing(x, Parsing{{}, true, false}).ok);          // empty on n>0
}

TEST_CASE("distinctness exemption applies only to an incomplete last phrase") {
    auto x = make_sequence("0101", 2);
    Parsing repeat{{2, 4}, true, false};
    auto check = verify_parsing(x, repeat);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("phrase 2") != std::string::npos);

    Parsing exempt{{2, 4}, true, true};
    CHECK(verify_parsing(x, exempt).ok);

    // A repeat before the end is never exempt.
    auto y = make_sequence("010101", 2);
    Parsing middle{{2, 4, 6}, true, true};
    CHECK_FALSE(verify_parsing(y, middle).ok);
}

TEST_CASE("load_parsing derives last_incomplete from a final repeat") {
    auto x = make_sequence("0101", 2);
    auto p = load_parsing("2 4", x);
    CHECK(p.boundaries == std::vector<std::size_t>{2, 4});
    CHECK(p.distinct);
    CHECK(p.last_incomplete);

    auto q = load_parsing("1 2 4 6", make_sequence("010001", 2));
    CHECK_FALSE(q.last_incomplete);

    CHECK_THROWS_AS(load_parsing("2 4 6", make_sequence("010101", 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_parsing("2 x", x), std::invalid_argument);
    CHECK_THROWS_AS(load_parsing("2 3", x), std::invalid_argument);
}

TEST_CASE("split_phrases returns the phrase contents") {
    auto x = make_sequence("010001", 2);
    auto phrases = split_phrases(x, Parsing{{1, 2, 4, 6}, true, false});
    REQUIRE(phrases.size() == 4);
    CHECK(phrases[0] == std::vector<Symbol>{0});
    CHECK(phrases[1] == std::vector<Symbol>{1});
    CHECK(phrases[2] == std::vector<Symbol>{0, 0});
    CHECK(phrases[3] == std::vector<Symbol>{0, 1});
}

TEST_CASE("phrase dictionary node ids are 1-based insertion indices") {
    PhraseDictionary d;
    CHECK(d.size() == 0);
    CHECK_FALSE(d.child(0, 0).has_value());

    auto n1 = d.insert(0, 0);   // "0"
    auto n2 = d.insert(0, 1);   // "1"
    auto n3 = d.insert(n1, 0);  // "00"
    CHECK(n1 == 1);
    CHECK(n2 == 2);
    CHECK(n3 == 3);
    CHECK(d.size() == 3);

    CHECK(d.child(0, 0) == n1);
    CHECK(d.child(n1, 0) == n3);
    CHECK_FALSE(d.child(n1, 1).has_value());

    CHECK(d.parent(n3) == n1);
    CHECK(d.last_symbol(n3) == Symbol{0});
    CHECK(d.phrase(n3) == std::vector<Symbol>{0, 0});
    CHECK(d.phrase(0).empty());

    std::vector<Symbol> w{0, 0};
    CHECK(d.find(w) == n3);
    std::vector<Symbol> missing{1, 1};
    CHECK_FALSE(d.find(missing).has_value());
}
