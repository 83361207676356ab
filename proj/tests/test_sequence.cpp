#include <doctest.h>

#include <random>
#include <stdexcept>

#include "obzcp/sequence.hpp"
#include "oracle.hpp"

using namespace obzcp;

namespace {

std::vector<int> full_sum(const SequencePair& p) { return aacf_sum_vector(p); }

}  // namespace

TEST_CASE("decode_hex follows the published digit expansion") {
    const auto a = decode_hex("159FE24", 25);
    CHECK(to_binary_string(a) == "1010110011111111000100100");
    CHECK(a[24] == 1);  // most significant written bit is a_{n-1}
    CHECK(a[0] == 0);

    const auto ones = decode_hex("7", 3);
    CHECK(ones[0] == 1);
    CHECK(ones[1] == 1);
    CHECK(ones[2] == 1);

    const auto s = decode_hex("1E", 5);
    CHECK(s[0] == 0);
    for (int i = 1; i < 5; ++i) CHECK(s[i] == 1);
}

TEST_CASE("decode_hex rejects bad input") {
    CHECK_THROWS_AS(decode_hex("12G", 25), std::invalid_argument);
    CHECK_THROWS_AS(decode_hex("", 5), std::invalid_argument);
    CHECK_THROWS_AS(decode_hex("40", 5), std::invalid_argument);   // needs 7 bits
    CHECK_THROWS_AS(decode_hex("1F", 4), std::invalid_argument);   // even length
    CHECK_THROWS_AS(decode_hex("1", 1), std::invalid_argument);    // n < 3
    CHECK_THROWS_AS(decode_hex("10000000000000000", 63), std::invalid_argument);
    CHECK_NOTHROW(decode_hex("7FFFFFFFFFFFFFFF", 63));
}

TEST_CASE("encode_hex is canonical and inverts decode") {
    CHECK(encode_hex(BinarySequence(3, 0b111)) == "7");
    CHECK(encode_hex(decode_hex("159FE24", 25)) == "159FE24");
    CHECK(encode_hex(decode_hex("00159fe24", 25)) == "159FE24");
    CHECK(encode_hex(BinarySequence(5, 0)) == "0");

    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const int n = 3 + 2 * static_cast<int>(rng() % 31);
        const BinarySequence s(n, rng() & low_mask(n));
        REQUIRE(decode_hex(encode_hex(s), n) == s);
    }
}

TEST_CASE("BinarySequence invariants") {
    CHECK_THROWS_AS(BinarySequence(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence(65, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence(5, 0b100000), std::invalid_argument);
    CHECK_THROWS_AS(SequencePair(BinarySequence(5, 1), BinarySequence(7, 1)), std::invalid_argument);
}

TEST_CASE("aacf worked examples") {
    const auto seven = decode_hex("7", 3);
    CHECK(aacf(seven, 0) == 3);
    CHECK(aacf(seven, 1) == 2);
    CHECK(aacf(seven, 2) == 1);
    CHECK(aacf(seven, 3) == 0);

    const auto s = decode_hex("1E", 5);
    CHECK(aacf(s, 1) == 2);
    CHECK(aacf(s, 2) == 1);
    CHECK(aacf(s, 3) == 0);
    CHECK(aacf(s, 4) == -1);
    CHECK(aacf(s, -4) == -1);
    CHECK(aacf(s, 5) == 0);
    CHECK(aacf(s, -100) == 0);
}

TEST_CASE("accf worked examples") {
    const auto a = decode_hex("7", 3);
    const auto b = decode_hex("5", 3);
    const int expected[] = {1, 0, 1, 0, 1};  // tau = -2..2
    for (int tau = -2; tau <= 2; ++tau) CHECK(accf(a, b, tau) == expected[tau + 2]);
    CHECK(accf(a, b, 3) == 0);
    CHECK(accf(a, b, -3) == 0);
    CHECK_THROWS_AS(accf(a, decode_hex("7", 5), 0), std::invalid_argument);

    const auto s = decode_hex("159FE24", 25);
    for (int tau = -25; tau <= 25; ++tau) CHECK(accf(s, s, tau) == aacf(s, tau));
}

TEST_CASE("aacf_sum_vector of published pairs") {
    SUBCASE("n = 35 Z-optimal pair") {
        const auto v = full_sum(decode_pair("7905A9444", "710C1A3B2", 35));
        const std::vector<int> expected = {70, 0, 0, 0, 0,  0, 0, 0,  0,  0,  0, 0,  0,  0,  0,  0,  0, 0,
                                           6,  2, -2, 2, -2, -2, 2, 2, 2, 2, -2, 2, -2, -2, -2, -2, -2};
        CHECK(v == expected);
    }
    SUBCASE("n = 27 optimal pair") {
        const auto v = full_sum(decode_pair("6AC2984", "42265F0", 27));
        const std::vector<int> expected = {54, 0, 0,  0, 0,  0,  0, 0, 0, 0, 0, 0,  0, 0,
                                           -2, -2, 2, -2, -2, 2, -2, 2, 2, 2, 2, -2, -2};
        CHECK(v == expected);
    }
}

TEST_CASE("rho_vector") {
    const auto r = rho_vector(decode_hex("1E", 5));
    CHECK(r.values == std::vector<int>{2});
    CHECK(r.at(1) == 2);
    CHECK(rho_vector(decode_hex("7", 3)).values.empty());

    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        const int n = 5 + 2 * static_cast<int>(rng() % 29);
        const BinarySequence s(n, rng() & low_mask(n));
        const auto rv = rho_vector(s);
        REQUIRE(static_cast<int>(rv.values.size()) == (n - 3) / 2);
        for (int tau = 1; tau <= (n - 3) / 2; ++tau) {
            REQUIRE(rv.at(tau) == aacf(s, tau));
            REQUIRE(((rv.at(tau) - (n - tau)) % 2 + 2) % 2 == 0);
        }
    }
}

TEST_CASE("packed kernel equals the elementwise oracle for every sequence up to n = 17") {
    for (int n = 1; n <= 17; n += 2) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const BinarySequence s(n, v);
            const auto naive = oracle::naive_rho(s);
            for (int tau = 0; tau < n; ++tau) {
                if (aacf(s, tau) != naive[static_cast<std::size_t>(tau)]) {
                    FAIL("n=" << n << " v=" << v << " tau=" << tau);
                }
            }
        }
    }
}

TEST_CASE("packed kernels equal the oracle on random long sequences") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        const int n = 19 + 2 * static_cast<int>(rng() % 23);
        const BinarySequence a(n, rng() & low_mask(n));
        const BinarySequence b(n, rng() & low_mask(n));
        const auto naive = oracle::naive_rho(a);
        for (int tau = 0; tau < n; ++tau) REQUIRE(aacf(a, tau) == naive[static_cast<std::size_t>(tau)]);
        const int tau = static_cast<int>(rng() % (2 * n + 1)) - n;
        REQUIRE(accf(a, b, tau) == oracle::naive_accf(a, b, tau));
        REQUIRE(accf(a, b, -tau) == accf(b, a, tau));
        REQUIRE(aacf(a, tau) == aacf(a, -tau));
    }
}

TEST_CASE("AACF sums are even") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 5000; ++i) {
        const int n = 3 + 2 * static_cast<int>(rng() % 30);
        const SequencePair p(BinarySequence(n, rng() & low_mask(n)), BinarySequence(n, rng() & low_mask(n)));
        const auto v = aacf_sum_vector(p);
        REQUIRE(v[0] == 2 * n);
        for (int x : v) REQUIRE(x % 2 == 0);
    }
}

TEST_CASE("reverse_bits") {
    CHECK(kernel::reverse_bits(0b0011, 4) == 0b1100);
    CHECK(kernel::reverse_bits(0b1, 1) == 0b1);
    CHECK(kernel::reverse_bits(0xFF, 0) == 0);
    CHECK(kernel::reverse_bits(1, 63) == (std::uint64_t{1} << 62));
}
