#include <doctest.h>

#include <vector>

#include "hddlogic/encode.hpp"
#include "hddlogic/errors.hpp"

using namespace hddlogic;

namespace {

std::vector<std::int8_t> S(std::initializer_list<int> v) {
    std::vector<std::int8_t> out;
    for (int x : v) out.push_back(static_cast<std::int8_t>(x));
    return out;
}

Word word_from_index(std::uint64_t value, std::size_t width) {
    std::vector<std::uint8_t> bits(width);
    for (std::size_t i = 0; i < width; ++i) bits[width - 1 - i] = (value >> i) & 1U;
    return Word(std::move(bits));
}

int sign_changes(const std::vector<std::int8_t>& s, std::size_t lo, std::size_t hi) {
    // changes across edges lo..hi-1 (edge k sits in front of cell k)
    int n = 0;
    for (std::size_t k = lo; k < hi; ++k) n += s[k] != s[k - 1];
    return n;
}

}  // namespace

TEST_CASE("Word parsing") {
    CHECK(Word::parse("1010").str() == "1010");
    CHECK_THROWS_AS(Word::parse(""), InvalidArgument);
    CHECK_THROWS_AS(Word::parse("10a1"), InvalidArgument);
    CHECK(Word::parse("101").padded(5).str() == "00101");
}

TEST_CASE("double_bits") {
    CHECK(double_bits(Word::parse("11010")).str() == "1111001100");
    CHECK(double_bits(Word::parse("1010")).str() == "11001100");
    CHECK(double_bits(Word::parse("0")).str() == "00");
}

TEST_CASE("undouble_bits") {
    CHECK(undouble_bits(Word::parse("11001100")).str() == "1010");
    CHECK(undouble_bits(Word::parse("1111")).str() == "11");
    CHECK_THROWS_AS(undouble_bits(Word::parse("1001")), MalformedDoubling);
    CHECK_THROWS_AS(undouble_bits(Word::parse("110")), MalformedDoubling);
}

TEST_CASE("to_pulse_train layouts") {
    const auto a = to_pulse_train(Word::parse("1010"), Polarity::Positive, 1, 1.0);
    CHECK(a.signs == S({-1, +1, -1, -1, -1, +1, -1, -1, -1, -1}));
    CHECK(a.bit_count == 4);

    const auto pos = to_pulse_train(Word::parse("1001"), Polarity::Positive, 1, 0.5);
    const auto neg = to_pulse_train(Word::parse("1001"), Polarity::Negative, 1, 0.5);
    REQUIRE(pos.signs.size() == neg.signs.size());
    for (std::size_t i = 0; i < pos.signs.size(); ++i) CHECK(neg.signs[i] == -pos.signs[i]);

    CHECK(to_pulse_train(Word::parse("1"), Polarity::Positive, 3, 1.0).signs == S({-1, +1, -1, -1, -1, -1}));
    CHECK_THROWS_AS(to_pulse_train(Word::parse("1"), Polarity::Positive, 0, 1.0), InvalidArgument);
}

TEST_CASE("window_boundaries") {
    CHECK(window_boundaries(0, 4, 1) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(window_boundaries(1, 4, 1) == std::pair<std::size_t, std::size_t>{3, 4});
    CHECK(window_boundaries(1, 4, 2) == std::pair<std::size_t, std::size_t>{4, 5});
    CHECK_THROWS_AS(window_boundaries(4, 4, 1), GeometryError);
}

TEST_CASE("window_boundaries matches an explicit layout enumeration") {
    // Oracle: the all-ones train has sign changes exactly at the window edges.
    for (int g = 1; g <= 4; ++g)
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto t = to_pulse_train(Word::ones(n), Polarity::Positive, g, 1.0);
            std::vector<std::size_t> edges;
            for (std::size_t k = 1; k < t.signs.size(); ++k)
                if (t.signs[k] != t.signs[k - 1]) edges.push_back(k);
            REQUIRE(edges.size() == 2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto [first, second] = window_boundaries(i, n, g);
                CHECK(first == edges[2 * i]);
                CHECK(second == edges[2 * i + 1]);
            }
        }
}

TEST_CASE("encoding properties over all words up to 8 bits") {
    for (std::size_t width = 1; width <= 8; ++width)
        for (std::uint64_t v = 0; v < (1ULL << width); ++v) {
            const Word w = word_from_index(v, width);
            REQUIRE(undouble_bits(double_bits(w)) == w);
            for (int g = 1; g <= 3; ++g) {
                const auto pos = to_pulse_train(w, Polarity::Positive, g, 1.0);
                auto neg = to_pulse_train(w, Polarity::Negative, g, 1.0);
                REQUIRE(pos.signs.size() == train_length(width, g));
                REQUIRE(pos.signs.front() == -1);
                REQUIRE(pos.signs.back() == -1);
                for (auto& s : neg.signs) s = static_cast<std::int8_t>(-s);
                REQUIRE(neg.signs == pos.signs);
                for (std::size_t i = 0; i < width; ++i) {
                    const std::size_t lo = 1 + i * static_cast<std::size_t>(1 + g);
                    const std::size_t hi = lo + static_cast<std::size_t>(1 + g);
                    REQUIRE(sign_changes(pos.signs, lo, hi) == (w[i] ? 2 : 0));
                }
            }
        }
}
