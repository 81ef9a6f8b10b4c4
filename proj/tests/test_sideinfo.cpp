#include <doctest.h>

#include <vector>

#include "cgflz/errors.hpp"
#include "cgflz/sideinfo.hpp"

using namespace cgflz;

TEST_CASE("joint incremental parse of the worked pair example") {
    auto x = make_sequence("010001", 2);
    auto u = make_sequence("010101", 2);
    auto jp = joint_incremental_parse(x, u);

    // Pair phrases (0,0) | (1,1) | (0,0)(0,1) | (0,0)(1,1).
    CHECK(jp.parsing.boundaries == std::vector<std::size_t>{1, 2, 4, 6});
    CHECK(jp.c() == 4);
    CHECK(jp.prefix_index == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(jp.last_x_symbol == std::vector<Symbol>{0, 1, 0, 1});

    REQUIRE(jp.context_count() == 3);
    CHECK(jp.u_phrases[0] == std::vector<Symbol>{0});
    CHECK(jp.u_phrases[1] == std::vector<Symbol>{1});
    CHECK(jp.u_phrases[2] == std::vector<Symbol>{0, 1});
    CHECK(jp.context_counts == std::vector<std::uint64_t>{1, 1, 2});
    CHECK(jp.context_of_phrase == std::vector<std::size_t>{0, 1, 2, 2});
    CHECK(jp.index_in_context == std::vector<std::size_t>{1, 1, 1, 2});
}

TEST_CASE("conditional code lengths follow the per-context index") {
    auto jp = joint_incremental_parse(make_sequence("010001", 2),
                                      make_sequence("010101", 2));
    auto profile = conditional_lz_lengths(jp, 2);
    CHECK(profile.granularity == Granularity::PerPhrase);
    CHECK(profile.lengths == std::vector<std::uint64_t>{1, 1, 1, 2});
}

TEST_CASE("joint parse flags an incomplete tail and groups contexts") {
    auto x = make_sequence("0000", 2);
    auto jp = joint_incremental_parse(x, x);
    // Pairs: (0,0) | (0,0)(0,0) | (0,0) -- tail repeats phrase 1.
    CHECK(jp.parsing.boundaries == std::vector<std::size_t>{1, 3, 4});
    CHECK(jp.parsing.last_incomplete);
    REQUIRE(jp.context_count() == 2);
    CHECK(jp.u_phrases[0] == std::vector<Symbol>{0});
    CHECK(jp.u_phrases[1] == std::vector<Symbol>{0, 0});
    CHECK(jp.context_counts == std::vector<std::uint64_t>{2, 1});
    CHECK(jp.context_of_phrase == std::vector<std::size_t>{0, 1, 0});
    CHECK(jp.index_in_context == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("joint parse validates lengths") {
    CHECK_THROWS_AS(joint_incremental_parse(make_sequence("00", 2),
                                            make_sequence("000", 2)),
                    std::invalid_argument);
}

TEST_CASE("conditional codec round trips and realizes the profile") {
    auto x = make_sequence("010001", 2);
    auto u = make_sequence("010101", 2);
    auto enc = conditional_lz_encode(x, u);
    CHECK(enc.payload_bits == 1 + 1 + 1 + 2);
    CHECK(enc.profile.lengths == std::vector<std::uint64_t>{1, 1, 1, 2});

    auto y = conditional_lz_decode(enc.payload, enc.side_channel, u, x.alphabet);
    CHECK(y.symbols == x.symbols);

    for (auto [xs, us] : {std::pair{"0000", "0000"}, {"0110", "1001"},
                          {"01100111", "00110011"}}) {
        CHECK(conditional_lz_roundtrip(make_sequence(xs, 2), make_sequence(us, 2)));
    }
}

TEST_CASE("when x equals u every phrase is first in its context") {
    auto x = make_sequence("010011", 2);  // parses completely: 0|1|00|11
    auto enc = conditional_lz_encode(x, x);
    // index_in_context is all ones: each u-phrase appears exactly once, so
    // every payload word is ceil(log2(alpha)) bits.
    for (auto j : enc.joint.index_in_context) CHECK(j == 1);
    CHECK(enc.payload_bits == enc.joint.c());
}

TEST_CASE("conditional decode rejects tampered channels") {
    auto x = make_sequence("010001", 2);
    auto u = make_sequence("010101", 2);
    auto enc = conditional_lz_encode(x, u);

    // Side channel shorter than its own header claims.
    std::vector<std::uint8_t> cut(enc.side_channel.begin(), enc.side_channel.end() - 2);
    CHECK_THROWS_AS(conditional_lz_decode(enc.payload, cut, u, x.alphabet), DecodeError);

    // Boundary word made non-increasing.
    auto bent = enc.side_channel;
    bent[7] = 0xff;  // first boundary (u32 BE) becomes huge
    CHECK_THROWS_AS(conditional_lz_decode(enc.payload, bent, u, x.alphabet), DecodeError);

    // Prefix pointer beyond the phrases seen so far.
    auto dangle = enc.side_channel;
    dangle[4 + 4 * 4 + 3] = 0x09;  // first prefix word
    CHECK_THROWS_AS(conditional_lz_decode(enc.payload, dangle, u, x.alphabet), DecodeError);

    // Payload padding corrupted.
    auto pad = enc.payload;
    pad.back() |= 0x01;
    CHECK_THROWS_AS(conditional_lz_decode(pad, enc.side_channel, u, x.alphabet), DecodeError);
}
