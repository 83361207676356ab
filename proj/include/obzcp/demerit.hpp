// demerit.hpp -- Pursley-Sarwate demerit factors.
//
// Sums of squared correlations are exact integers; only the final ratios
// are floating point.
#pragma once

#include <cstdint>

#include "obzcp/sequence.hpp"

namespace obzcp {

struct DemeritReport {
    double adf_a = 0.0;
    double adf_b = 0.0;
    double cdf = 0.0;
    double psc = 0.0;
};

// sum over tau in (-n, n) of rho_{a,b}(tau)^2
std::int64_t cross_energy(const BinarySequence& a, const BinarySequence& b);
// 2 * sum over tau in [1, n) of rho_a(tau)^2
std::int64_t sidelobe_energy(const BinarySequence& a);

double cdf(const BinarySequence& a, const BinarySequence& b);
double adf(const BinarySequence& a);
DemeritReport psc(const SequencePair& p);

}  // namespace obzcp
