#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cgflz/errors.hpp"
#include "cgflz/lz78.hpp"

using namespace cgflz;

TEST_CASE("incremental parse of 010001 yields 0|1|00|01") {
    auto r = incremental_parse(make_sequence("010001", 2));
    CHECK(r.parsing.boundaries == std::vector<std::size_t>{1, 2, 4, 6});
    CHECK(r.parsing.distinct);
    CHECK_FALSE(r.parsing.last_incomplete);
    CHECK(r.prefix_index == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(r.last_symbol == std::vector<Symbol>{0, 1, 0, 1});
    CHECK(r.c() == 4);
    CHECK(verify_parsing(make_sequence("010001", 2), r.parsing).ok);
}

TEST_CASE("incremental parse flags an incomplete final phrase") {
    auto r = incremental_parse(make_sequence("0000", 2));
    CHECK(r.parsing.boundaries == std::vector<std::size_t>{1, 3, 4});
    CHECK(r.parsing.last_incomplete);
    CHECK(r.prefix_index == std::vector<std::size_t>{0, 1, 0});
    CHECK(r.last_symbol == std::vector<Symbol>{0, 0, 0});
    CHECK(verify_parsing(make_sequence("0000", 2), r.parsing).ok);
}

TEST_CASE("incremental parse of the empty sequence") {
    auto r = incremental_parse(make_sequence("", 2));
    CHECK(r.c() == 0);
    CHECK(verify_parsing(make_sequence("", 2), r.parsing).ok);
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(9) == 4);
    CHECK(ceil_log2(std::uint64_t{1} << 63) == 63);
}

TEST_CASE("phrase code lengths are ceil(log2(alpha * i))") {
    CHECK(lz_phrase_lengths(4, 2) == std::vector<std::uint64_t>{1, 2, 3, 3});
    CHECK(lz_phrase_lengths(3, 3) == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(lz_phrase_lengths(0, 2).empty());
}

TEST_CASE("lz_encode emits the frozen stream for 010001") {
    auto enc = lz_encode(make_sequence("010001", 2));
    CHECK(enc.phrase_lengths == std::vector<std::uint64_t>{1, 2, 3, 3});
    CHECK(enc.payload_bits == 9);
    // header: alpha=2 (u16 BE), n=6 (u64 BE); payload bits 0 01 010 011 -> 0x29 0x80
    std::vector<std::uint8_t> expect{0x00, 0x02, 0, 0, 0, 0, 0, 0, 0, 0x06, 0x29, 0x80};
    CHECK(enc.stream == expect);
}

TEST_CASE("lz round trip over assorted sequences") {
    for (auto text : {"0", "010001", "0000", "0101010101", "012201120012"}) {
        std::size_t alpha = std::string_view(text).find('2') == std::string_view::npos ? 2 : 3;
        auto x = make_sequence(text, alpha);
        auto y = lz_decode(lz_encode(x).stream);
        CHECK(y.symbols == x.symbols);
        CHECK(y.alpha() == alpha);
    }
    CHECK_THROWS_AS(lz_encode(make_sequence("", 2)), std::invalid_argument);
}

TEST_CASE("lz_decode rejects malformed streams with typed errors") {
    auto good = lz_encode(make_sequence("010001", 2)).stream;

    auto expect_kind = [](const std::vector<std::uint8_t>& s, DecodeError::Kind kind) {
        try {
            lz_decode(s);
            FAIL_CHECK("expected DecodeError");
        } catch (const DecodeError& e) {
            CHECK(e.kind() == kind);
        }
    };

    // Header cut short: the stream dies before a full header exists.
    expect_kind({0x00, 0x02, 0x00}, DecodeError::Kind::BadHeader);
    // alpha < 2 is not a legal stream.
    std::vector<std::uint8_t> bad_alpha = good;
    bad_alpha[1] = 0x01;
    expect_kind(bad_alpha, DecodeError::Kind::BadHeader);
    // Payload missing a byte.
    std::vector<std::uint8_t> cut = good;
    cut.pop_back();
    expect_kind(cut, DecodeError::Kind::Truncated);
    // Phrase 3 codeword 110 -> value 6 -> prefix index 3, but only 2 phrases exist.
    std::vector<std::uint8_t> dangling = good;
    dangling[10] = 0x39;
    dangling[11] = 0x80;
    expect_kind(dangling, DecodeError::Kind::IndexOutOfRange);
    // Nonzero padding after the last codeword.
    std::vector<std::uint8_t> pad = good;
    pad[11] = 0x81;
    expect_kind(pad, DecodeError::Kind::Corrupt);
    // Header promises fewer symbols than the phrases deliver, or far more.
    std::vector<std::uint8_t> short_n = good;
    short_n[9] = 0x05;  // n=5 but phrases cover 6 symbols
    expect_kind(short_n, DecodeError::Kind::Corrupt);
    std::vector<std::uint8_t> long_n = good;
    long_n[9] = 0x64;  // n=100 exhausts the payload mid-codeword
    expect_kind(long_n, DecodeError::Kind::Truncated);
}

TEST_CASE("block-restarted phrase counts") {
    auto x = make_sequence("00011011", 2);
    auto b = block_restarted_counts(x, 2, PhraseCountMethod::Incremental);
    CHECK(b.counts == std::vector<std::uint64_t>{2, 2, 2, 2});
    // "00" and "11" end in a repeated one-symbol tail; "01" and "10" do not.
    CHECK(b.distinct_counts == std::vector<std::uint64_t>{1, 2, 2, 1});

    auto whole = block_restarted_counts(x, 8, PhraseCountMethod::Incremental);
    REQUIRE(whole.counts.size() == 1);
    CHECK(whole.counts[0] == incremental_parse(x).c());

    CHECK_THROWS_AS(block_restarted_counts(x, 3, PhraseCountMethod::Incremental),
                    DivisibilityError);
}

TEST_CASE("max_distinct_parse modes and exactness flags") {
    auto x = make_sequence("0101", 2);

    auto brute = max_distinct_parse(x, MaxDistinctMode::BruteForce);
    CHECK(brute.count == 3);  // 0|1|01 (or 01|0|1): three phrases, pairwise distinct
    CHECK(brute.distinct_count == 3);
    CHECK(brute.exact);
    CHECK(verify_parsing(x, brute.parsing).ok);

    auto greedy = max_distinct_parse(x, MaxDistinctMode::Greedy);
    CHECK(greedy.count == 3);
    CHECK_FALSE(greedy.exact);

    auto autop = max_distinct_parse(x, MaxDistinctMode::Auto);
    CHECK(autop.count == 3);
    CHECK(autop.exact);  // n <= 20 routes to the exhaustive search

    // The greedy parse of 00100 stops at three phrases (0|01|00) while 00|1|0|0
    // reaches four with a repeated tail; only three strings are distinct either way.
    auto gap = max_distinct_parse(make_sequence("00100", 2), MaxDistinctMode::BruteForce);
    CHECK(gap.count == 4);
    CHECK(gap.distinct_count == 3);
    CHECK(max_distinct_parse(make_sequence("00100", 2), MaxDistinctMode::Greedy).count == 3);

    // All-zero input: 0|00|0 counts three phrases but only two distinct strings.
    auto zeros = max_distinct_parse(make_sequence("0000", 2), MaxDistinctMode::BruteForce);
    CHECK(zeros.count == 3);
    CHECK(zeros.distinct_count == 2);

    auto big = max_distinct_parse(make_sequence(std::string(24, '0'), 2),
                                  MaxDistinctMode::Auto);
    CHECK_FALSE(big.exact);  // n > 20 falls back to greedy
    CHECK_THROWS_AS(max_distinct_parse(make_sequence(std::string(24, '0'), 2),
                                       MaxDistinctMode::BruteForce),
                    std::invalid_argument);
}
