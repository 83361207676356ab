#include <doctest.h>

#include <cmath>
#include <random>

#include "obzcp/catalog.hpp"
#include "obzcp/demerit.hpp"
#include "obzcp/equivalence.hpp"
#include "oracle.hpp"

using namespace obzcp;
using doctest::Approx;

namespace {

constexpr double kTol = 5e-5;

}  // namespace

TEST_CASE("demerit examples") {
    CHECK(std::abs(cdf(decode_hex("7", 3), decode_hex("5", 3)) - 0.33333) < kTol);
    CHECK(std::abs(cdf(decode_hex("1E", 5), decode_hex("16", 5)) - 0.68) < kTol);
    CHECK(std::abs(adf(decode_hex("7", 3)) - 1.1111) < kTol);
    CHECK(std::abs(adf(decode_hex("1E", 5)) - 0.48) < kTol);

    const auto r3 = psc(decode_pair("7", "5", 3));
    CHECK(std::abs(r3.psc - 1.4444) < kTol);

    const auto r7 = psc(decode_pair("5D", "4F", 7));
    CHECK(std::abs(r7.psc - 1.185) < kTol);
    CHECK(std::abs(r7.adf_a - 0.77551) < kTol);
    CHECK(std::abs(r7.adf_b - 0.28571) < kTol);
    CHECK(std::abs(r7.cdf - 0.71429) < kTol);

    CHECK(std::abs(psc(decode_pair("156CC7FF8E494", "1524E3E03992A", 49)).psc - 1.0388) < kTol);
    CHECK(std::abs(psc(decode_pair("159FB70", "11DA0CA", 25)).psc - 1.0740) < kTol);
    CHECK(std::abs(psc(decode_pair("1D29F4D110", "11273940E8", 37)).psc - 1.0515) < kTol);
}

TEST_CASE("exact energies") {
    // "7" = +++ : rho(1) = 2, rho(2) = 1
    CHECK(sidelobe_energy(decode_hex("7", 3)) == 10);
    // "7" vs "5" = +-+ : cross terms at tau = -2..2 are 1, 0, 1, 0, 1
    CHECK(cross_energy(decode_hex("7", 3), decode_hex("5", 3)) == 3);
    CHECK(cross_energy(decode_hex("7", 3), decode_hex("7", 3)) == 9 + 10);
    CHECK(adf(BinarySequence(1, 1)) == 0.0);
    CHECK(adf(BinarySequence(1, 0)) == 0.0);
}

TEST_CASE("every Table XIII row reproduces") {
    const auto rows = load_catalog().demerits;
    REQUIRE(rows.size() == 24);
    for (const auto& d : rows) {
        INFO("n=" << d.n);
        const auto r = psc(d.pair());
        CHECK(std::abs(r.psc - d.psc) <= kTol);
        CHECK(std::abs(r.adf_a - d.adf1) <= kTol);
        CHECK(std::abs(r.adf_b - d.adf2) <= kTol);
        CHECK(std::abs(r.cdf - d.cdf) <= kTol);
    }
}

TEST_CASE("energies match the oracle and the report is self-consistent") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        const int n = 1 + 2 * static_cast<int>(rng() % 32);
        const BinarySequence a(n, rng() & low_mask(n));
        const BinarySequence b(n, rng() & low_mask(n));
        std::int64_t cross = 0;
        for (int tau = 1 - n; tau < n; ++tau) {
            const std::int64_t v = oracle::naive_accf(a, b, tau);
            cross += v * v;
        }
        REQUIRE(cross_energy(a, b) == cross);
        std::int64_t side = 0;
        const auto rho = oracle::naive_rho(a);
        for (int tau = 1; tau < n; ++tau) side += 2 * std::int64_t{rho[static_cast<std::size_t>(tau)]} * rho[static_cast<std::size_t>(tau)];
        REQUIRE(sidelobe_energy(a) == side);

        REQUIRE(cdf(a, a) == Approx(1.0 + adf(a)));
        const auto r = psc(SequencePair(a, b));
        REQUIRE(r.psc == Approx(std::sqrt(r.adf_a * r.adf_b) + r.cdf));
        REQUIRE(r.adf_a >= 0);
        REQUIRE(r.cdf >= 0);
    }
}

TEST_CASE("PSC is at least 1 on 10^5 random pairs at n = 5, 15, 31") {
    std::mt19937_64 rng(32);
    for (int n : {5, 15, 31}) {
        double lowest = 1e9;
        for (int i = 0; i < 100000; ++i) {
            const SequencePair p(BinarySequence(n, rng() & low_mask(n)), BinarySequence(n, rng() & low_mask(n)));
            const double v = psc(p).psc;
            lowest = std::min(lowest, v);
            if (v < 1.0 - 1e-12) FAIL("n=" << n << " psc=" << v);
        }
        MESSAGE("n=" << n << " lowest PSC " << lowest);
    }
}

TEST_CASE("demerit invariances") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 1000; ++i) {
        const int n = 3 + 2 * static_cast<int>(rng() % 25);
        const BinarySequence a(n, rng() & low_mask(n));
        const BinarySequence b(n, rng() & low_mask(n));
        REQUIRE(adf(negate(a)) == adf(a));
        REQUIRE(adf(reverse(a)) == adf(a));
        REQUIRE(cdf(negate(a), b) == cdf(a, b));
        REQUIRE(cdf(a, negate(b)) == cdf(a, b));
        REQUIRE(cdf(b, a) == cdf(a, b));
        REQUIRE(cdf(reverse(a), reverse(b)) == cdf(a, b));
        const double v = psc(SequencePair(a, b)).psc;
        REQUIRE(psc(SequencePair(b, a)).psc == Approx(v));
        REQUIRE(psc(SequencePair(negate(a), b)).psc == Approx(v));
        REQUIRE(psc(SequencePair(reverse(a), reverse(b))).psc == Approx(v));
    }
}
