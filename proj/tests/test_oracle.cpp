#include <doctest.h>

#include <random>
#include <stdexcept>

#include "obzcp/classify.hpp"
#include "obzcp/equivalence.hpp"
#include "oracle.hpp"

using namespace obzcp;

TEST_CASE("naive_rho basics") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + 2 * static_cast<int>(rng() % 32);
        const BinarySequence a(n, rng() & low_mask(n));
        const auto rho = oracle::naive_rho(a);
        REQUIRE(rho.size() == static_cast<std::size_t>(n));
        REQUIRE(rho[0] == n);
        for (int tau = 0; tau < n; ++tau) {
            REQUIRE(oracle::naive_accf(a, a, tau) == rho[static_cast<std::size_t>(tau)]);
            REQUIRE(oracle::naive_accf(a, a, -tau) == rho[static_cast<std::size_t>(tau)]);
        }
        REQUIRE(oracle::naive_accf(a, a, n) == 0);
        REQUIRE(oracle::naive_accf(a, a, -n) == 0);
    }
    CHECK(oracle::to_signs(decode_hex("5", 3)) == std::vector<int>{-1, 1, -1});
}

TEST_CASE("brute_force_pairs") {
    const auto five = oracle::brute_force_pairs(5, 2);
    CHECK_FALSE(five.empty());
    for (const auto& p : five) {
        CHECK(canonical(p) == p);
        CHECK(check_end_parity(p));
        CHECK(classify(p).category == Category::Optimal);
    }
    for (const auto& p : oracle::brute_force_pairs(7, 2)) CHECK(check_end_parity(p));
    // Larger bounds admit more pairs.
    CHECK(oracle::brute_force_pairs(9, 2).size() <= oracle::brute_force_pairs(9, 6).size());

    CHECK_THROWS_AS(oracle::brute_force_pairs(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(oracle::brute_force_pairs(8, 2), std::invalid_argument);
    CHECK_THROWS_AS(oracle::brute_force_pairs(15, 2), std::invalid_argument);
}
