#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "dnacodes/io.hpp"
#include "helpers.hpp"

using namespace dnacodes;
using testutil::seq;

TEST_SUITE("io") {

TEST_CASE("digit lines parse") {
    std::istringstream in("0101\n1010\n");
    const ParsedSequences parsed = parse_sequences(in);
    CHECK(parsed.q == 2);
    REQUIRE(parsed.sequences.size() == 2);
    CHECK(parsed.sequences[0] == seq(2, "0101"));
    CHECK(parsed.sequences[1] == seq(2, "1010"));
}

TEST_CASE("comments, blank lines and whitespace are skipped") {
    std::istringstream in("# header\n\n  0101  \r\n\n# trailing\n1100\n");
    const ParsedSequences parsed = parse_sequences(in);
    REQUIRE(parsed.sequences.size() == 2);
    CHECK(parsed.sequences[1] == seq(2, "1100"));
}

TEST_CASE("ACGT lines force at least a quaternary alphabet") {
    std::istringstream in("ACAT\nacgt\n");
    const ParsedSequences parsed = parse_sequences(in);
    CHECK(parsed.q == 4);
    CHECK(parsed.sequences[0] == seq(4, "0103"));
    CHECK(parsed.sequences[1] == seq(4, "0123"));
}

TEST_CASE("alphabet inference rounds up to even") {
    std::istringstream in("0123\n0045\n");
    CHECK(parse_sequences(in).q == 6);
    std::istringstream in2("001\n");
    CHECK(parse_sequences(in2).q == 2);
    std::istringstream in3("012\n");
    CHECK(parse_sequences(in3).q == 4);
}

TEST_CASE("an explicit alphabet is enforced") {
    std::istringstream in("0123\n");
    CHECK_THROWS_WITH_AS(parse_sequences(in, 2), doctest::Contains("line 1"),
                         std::invalid_argument);
    std::istringstream in2("0101\n");
    CHECK(parse_sequences(in2, 4).q == 4);
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream in("0101\n01x1\n");
    CHECK_THROWS_WITH_AS(parse_sequences(in), doctest::Contains("line 2"),
                         std::invalid_argument);
}

TEST_CASE("empty input without an alphabet is an error") {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(parse_sequences(in), std::invalid_argument);
    std::istringstream in2("");
    const ParsedSequences parsed = parse_sequences(in2, 4);
    CHECK(parsed.q == 4);
    CHECK(parsed.sequences.empty());
}

TEST_CASE("fixtures load with the expected shape") {
    const auto ex11 = parse_sequence_file(testutil::fixture_path("example_1_1.txt"));
    CHECK(ex11.q == 4);
    CHECK(ex11.sequences.size() == 4);
    const auto ex31 = parse_sequence_file(testutil::fixture_path("example_3_1.txt"));
    CHECK(ex31.q == 4);
    CHECK(ex31.sequences.size() == 34);
    const auto ex32 = parse_sequence_file(testutil::fixture_path("example_3_2.txt"));
    CHECK(ex32.sequences.size() == 22);
    const auto ex33 = parse_sequence_file(testutil::fixture_path("example_3_3.txt"));
    CHECK(ex33.sequences.size() == 24);
    CHECK(parse_sequence_file(testutil::fixture_path("example_3_1_deletion.txt"))
              .sequences.size() == 20);
}

TEST_CASE("missing file is a clean error") {
    CHECK_THROWS_AS(parse_sequence_file("/nonexistent/path.txt"), std::invalid_argument);
}

TEST_CASE("emitted sequences re-parse to the same set") {
    const auto check_roundtrip = [](const std::vector<QarySequence>& words, bool acgt) {
        std::istringstream in(format_sequences(words, acgt));
        const ParsedSequences back = parse_sequences(in, words.front().q());
        const std::set<QarySequence> a(words.begin(), words.end());
        const std::set<QarySequence> b(back.sequences.begin(), back.sequences.end());
        CHECK(a == b);
        CHECK(back.sequences.size() == words.size());
    };
    check_roundtrip(testutil::all_words(2, 4), false);
    check_roundtrip(testutil::all_words(4, 3), false);
    check_roundtrip(testutil::all_words(4, 3), true);
    check_roundtrip(testutil::all_words(6, 2), false);
}

TEST_CASE("single word parsing") {
    CHECK(parse_word(4, "ACAT") == QarySequence(4, {0, 1, 0, 3}));
    CHECK(parse_word(2, "0101") == QarySequence(2, {0, 1, 0, 1}));
    CHECK_THROWS_AS(parse_word(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(2, "012"), std::invalid_argument);
}

}  // TEST_SUITE
