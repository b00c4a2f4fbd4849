#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "ballotope/sequence.hpp"

using namespace ballotope;

namespace {

// Quadratic reference: literally count ones and zeros in every prefix and
// every suffix. Kept deliberately independent of the library's single-pass
// implementation.
bool slow_is_bbs(const std::string& s) {
    for (size_t len = 1; len <= s.size(); ++len) {
        auto ones = [](const std::string& w) {
            return std::count(w.begin(), w.end(), '1');
        };
        std::string prefix = s.substr(0, len);
        std::string suffix = s.substr(s.size() - len);
        if (2 * ones(prefix) <= static_cast<long>(len)) return false;
        if (2 * ones(suffix) <= static_cast<long>(len)) return false;
    }
    return true;
}

std::string word_of(std::uint32_t mask, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((mask >> (n - 1 - j)) & 1) s[static_cast<size_t>(j)] = '1';
    return s;
}

// B_1..B_18, frozen from two independent brute-force runs.
const std::vector<long> kSmallCounts = {1, 1,  1,  1,  2,  3,   5,   9,   15,
                                        28, 49, 91, 166, 307, 574, 1065, 2016, 3769};

}  // namespace

TEST_CASE("is_bbs on the worked examples") {
    CHECK(is_bbs(BitSequence("11011001111")));
    CHECK(is_bbs(BitSequence("110111011")));
    CHECK(is_bbs(BitSequence("1")));
    CHECK_FALSE(is_bbs(BitSequence("10")));
    CHECK_FALSE(is_bbs(BitSequence("0")));
    CHECK_FALSE(is_bbs(BitSequence("1101100")));  // ends in 0, suffix fails
    CHECK_FALSE(is_bbs(BitSequence("110110011")));
}

TEST_CASE("is_bbs agrees with the quadratic definition") {
    for (int n = 1; n <= 12; ++n)
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            std::string w = word_of(mask, n);
            REQUIRE(is_bbs(BitSequence(w)) == slow_is_bbs(w));
        }
}

TEST_CASE("BitSequence rejects malformed input") {
    CHECK_THROWS_AS(BitSequence(""), std::invalid_argument);
    CHECK_THROWS_AS(BitSequence("10a1"), std::invalid_argument);
    CHECK_THROWS_AS(BitSequence("102"), std::invalid_argument);
}

TEST_CASE("enumerate_bbs: small cases, lexicographic order") {
    auto one = enumerate_bbs(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].str() == "1");

    auto five = enumerate_bbs(5);
    REQUIRE(five.size() == 2);
    CHECK(five[0].str() == "11011");
    CHECK(five[1].str() == "11111");

    CHECK(enumerate_bbs(7).size() == 5);

    auto nine = enumerate_bbs(9);
    CHECK(std::is_sorted(nine.begin(), nine.end(),
                         [](const BitSequence& a, const BitSequence& b) { return a.str() < b.str(); }));
}

TEST_CASE("enumerate_bbs cap refusal names the cap") {
    try {
        enumerate_bbs(23);
        FAIL("expected a cap refusal");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("22") != std::string::npos);
    }
    CHECK_NOTHROW(enumerate_bbs(12, 12));
    CHECK_THROWS_AS(enumerate_bbs(13, 12), std::domain_error);
}

TEST_CASE("count table matches brute force and the frozen values") {
    auto table = count_bbs_table(18);
    for (int n = 1; n <= 18; ++n) {
        CHECK(table[static_cast<size_t>(n)] == kSmallCounts[static_cast<size_t>(n) - 1]);
        if (n <= 14) CHECK(table[static_cast<size_t>(n)] == count_bbs_brute(n));
    }
    CHECK(count_bbs(2) == 1);
    CHECK(count_bbs(3) == 1);
    CHECK(count_bbs(7) == 5);
}

TEST_CASE("count_bbs reaches large n exactly") {
    CHECK(count_bbs(100) == BigInt("3190444675281382738994939746"));
    auto table = count_bbs_table(61);
    for (int n = 1; n < 61; ++n)
        CHECK(table[static_cast<size_t>(n) + 1] >= table[static_cast<size_t>(n)]);
}

TEST_CASE("count_bbs at n=500 stays exact, monotone, and inside the odd-length bounds") {
    auto table = count_bbs_table(500);
    for (int n = 1; n < 500; ++n)
        REQUIRE(table[static_cast<size_t>(n) + 1] >= table[static_cast<size_t>(n)]);
    const BigInt b499 = table[499];
    CHECK(Rational(b499) >= Rational(BigInt(1) << 499, 16 * (499 - 4)));
    CHECK(Rational(b499) <= Rational(BigInt(1) << 499, 499));
    CHECK(table[500] >= b499);
}

TEST_CASE("appending a 1 to any ballot sequence keeps the property") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& b : enumerate_bbs(n)) {
            REQUIRE(is_bbs(BitSequence(b.str() + "1")));
        }
}

TEST_CASE("bbs_to_path") {
    CHECK(bbs_to_path(BitSequence("11011001111")).heights ==
          std::vector<int>{0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 5});
    CHECK(bbs_to_path(BitSequence("1")).heights == std::vector<int>{0, 1});
    CHECK(bbs_to_path(BitSequence("10")).heights == std::vector<int>{0, 1, 0});
}

TEST_CASE("sumset and difference set reports") {
    auto full = sumset_fullness(BitSequence("111"));
    CHECK(full.sumset_full);
    CHECK(full.diffset_full);
    CHECK(full.sumset == std::vector<int>{2, 3, 4, 5, 6});

    auto gap = sumset_fullness(BitSequence("11011"));
    CHECK(gap.sumset_full);
    CHECK(gap.diffset_full);
    CHECK(gap.sumset == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(gap.diffset == std::vector<int>{-4, -3, -2, -1, 0, 1, 2, 3, 4});

    auto ten = sumset_fullness(BitSequence("10"));
    CHECK_FALSE(ten.sumset_full);
    CHECK(ten.sumset == std::vector<int>{2});
}

TEST_CASE("every short ballot sequence fills both the sumset and diffset") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& b : enumerate_bbs(n)) {
            auto rep = sumset_fullness(b);
            REQUIRE(rep.sumset_full);
            REQUIRE(rep.diffset_full);
        }
}

TEST_CASE("bbs_ratio") {
    CHECK(bbs_ratio(7) == Rational(35, 128));
    CHECK(bbs_ratio(1) == Rational(1, 2));
    Rational r100 = bbs_ratio(100);
    CHECK(r100 > Rational(18, 100));
    CHECK(r100 < Rational(32, 100));
}
