#include "obzcp/demerit.hpp"

#include <cmath>
#include <stdexcept>

namespace obzcp {

std::int64_t cross_energy(const BinarySequence& a, const BinarySequence& b) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("demerit factor of sequences with different lengths");
    }
    std::int64_t sum = 0;
    for (int tau = 1 - a.length(); tau < a.length(); ++tau) {
        const std::int64_t r = accf(a, b, tau);
        sum += r * r;
    }
    return sum;
}

std::int64_t sidelobe_energy(const BinarySequence& a) {
    std::int64_t sum = 0;
    for (int tau = 1; tau < a.length(); ++tau) {
        const std::int64_t r = aacf(a, tau);
        sum += r * r;
    }
    return 2 * sum;
}

double cdf(const BinarySequence& a, const BinarySequence& b) {
    const double n = a.length();
    return static_cast<double>(cross_energy(a, b)) / (n * n);
}

double adf(const BinarySequence& a) {
    const double n = a.length();
    return static_cast<double>(sidelobe_energy(a)) / (n * n);
}

DemeritReport psc(const SequencePair& p) {
    DemeritReport r;
    r.adf_a = adf(p.a);
    r.adf_b = adf(p.b);
    r.cdf = cdf(p.a, p.b);
    r.psc = std::sqrt(r.adf_a * r.adf_b) + r.cdf;
    return r;
}

}  // namespace obzcp
