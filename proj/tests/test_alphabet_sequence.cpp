#include <doctest.h>

#include "cgflz/errors.hpp"
#include "cgflz/rational.hpp"
#include "cgflz/sequence.hpp"

using namespace cgflz;

TEST_CASE("indexed alphabet uses 0-9a-z, or decimal strings when larger") {
    auto a = Alphabet::indexed(4);
    CHECK(a.size() == 4);
    CHECK(a.label(0) == "0");
    CHECK(a.label(3) == "3");
    CHECK(a.single_char_labels());
    CHECK(a.index_of("2") == Symbol{2});
    CHECK_FALSE(a.index_of("x").has_value());

    auto mid = Alphabet::indexed(36);
    CHECK(mid.label(10) == "a");
    CHECK(mid.label(35) == "z");
    CHECK(mid.single_char_labels());

    auto big = Alphabet::indexed(40);
    CHECK(big.label(10) == "10");
    CHECK(big.label(35) == "35");
    CHECK_FALSE(big.single_char_labels());
    CHECK(big.label(36) == "36");
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({std::string("0")}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({"0", "0"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({"0", ""}), std::invalid_argument);
}

TEST_CASE("load_alphabet reads one token per line") {
    auto a = load_alphabet("heads\ntails\r\n");
    CHECK(a.size() == 2);
    CHECK(a.label(1) == "tails");
    CHECK_FALSE(a.single_char_labels());
}

TEST_CASE("token text without interior whitespace splits per character") {
    auto x = load_sequence("010001\n", Alphabet::indexed(2), SequenceFormat::TokenText);
    CHECK(x.size() == 6);
    CHECK(x.symbols == std::vector<Symbol>{0, 1, 0, 0, 0, 1});
}

TEST_CASE("token text with interior whitespace splits on tokens") {
    auto a = load_alphabet("heads\ntails\n");
    auto x = load_sequence("heads tails heads", a, SequenceFormat::TokenText);
    CHECK(x.symbols == std::vector<Symbol>{0, 1, 0});
}

TEST_CASE("unknown tokens carry token and position") {
    try {
        load_sequence("012", Alphabet::indexed(2), SequenceFormat::TokenText);
        FAIL("expected UnknownSymbolError");
    } catch (const UnknownSymbolError& e) {
        CHECK(e.token() == "2");
        CHECK(e.position() == 2);
    }
}

TEST_CASE("raw bytes are symbol indices with range check") {
    std::string raw{'\x00', '\x01', '\x02'};
    auto x = load_sequence(raw, Alphabet::indexed(3), SequenceFormat::RawBytes);
    CHECK(x.symbols == std::vector<Symbol>{0, 1, 2});
    CHECK_THROWS_AS(load_sequence(raw, Alphabet::indexed(2), SequenceFormat::RawBytes),
                    UnknownSymbolError);
}

TEST_CASE("format_tokens inverts token text") {
    auto x = make_sequence("0102", 3);
    CHECK(format_tokens(x) == "0102");
    auto a = load_alphabet("lo\nhi\n");
    SymbolSequence y{a, {1, 0, 1}};
    CHECK(format_tokens(y) == "hi lo hi");
    CHECK(load_sequence(format_tokens(y), a, SequenceFormat::TokenText).symbols ==
          y.symbols);
}

TEST_CASE("rationals parse fractions, integers, and decimals exactly") {
    CHECK(parse_rational("1/2") == Rational{1, 2});
    CHECK(parse_rational("2") == Rational{2, 1});
    CHECK(parse_rational("0.25") == Rational{1, 4});
    CHECK(parse_rational("1.5").value() == doctest::Approx(1.5));
    CHECK(parse_rational("1/2").str() == "1/2");
    CHECK(parse_rational("4").str() == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    auto grid = parse_rational_list("0.25,0.5,1,2,4");
    REQUIRE(grid.size() == 5);
    CHECK(grid[0] == Rational{1, 4});
    CHECK(grid[4] == Rational{4, 1});
}
