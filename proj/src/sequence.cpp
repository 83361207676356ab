#include "obzcp/sequence.hpp"

#include <stdexcept>

namespace obzcp {

namespace {

void check_length(int n) {
    if (n < 1 || n > kMaxLength || n % 2 == 0) {
        throw std::invalid_argument("sequence length must be odd and in [1, " +
                                    std::to_string(kMaxLength) + "], got " + std::to_string(n));
    }
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

BinarySequence::BinarySequence(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    check_length(n);
    if ((bits & ~low_mask(n)) != 0) {
        throw std::invalid_argument("sequence value does not fit in " + std::to_string(n) + " bits");
    }
}

SequencePair::SequencePair(BinarySequence first, BinarySequence second)
    : a(first), b(second) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("pair members differ in length: " + std::to_string(a.length()) +
                                    " vs " + std::to_string(b.length()));
    }
}

BinarySequence decode_hex(std::string_view text, int n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("hex sequences need an odd length >= 3, got " + std::to_string(n));
    }
    check_length(n);
    if (text.empty()) throw std::invalid_argument("empty hex string");

    std::uint64_t value = 0;
    for (char c : text) {
        const int d = hex_digit(c);
        if (d < 0) throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
        if ((value >> 60) != 0) {
            throw std::invalid_argument("hex value '" + std::string(text) + "' exceeds " +
                                        std::to_string(n) + " bits");
        }
        value = (value << 4) | static_cast<std::uint64_t>(d);
    }
    if ((value & ~low_mask(n)) != 0) {
        throw std::invalid_argument("hex value '" + std::string(text) + "' exceeds " +
                                    std::to_string(n) + " bits");
    }
    return BinarySequence(n, value);
}

std::string encode_hex(const BinarySequence& seq) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::uint64_t value = seq.bits();
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.insert(out.begin(), kDigits[value & 0xF]);
        value >>= 4;
    }
    return out;
}

SequencePair decode_pair(std::string_view a_hex, std::string_view b_hex, int n) {
    return SequencePair(decode_hex(a_hex, n), decode_hex(b_hex, n));
}

std::string to_binary_string(const BinarySequence& seq) {
    std::string out;
    out.reserve(static_cast<std::size_t>(seq.length()));
    for (int i = seq.length() - 1; i >= 0; --i) out.push_back(seq[i] ? '1' : '0');
    return out;
}

int aacf(const BinarySequence& a, int tau) {
    if (tau < 0) tau = -tau;
    if (tau >= a.length()) return 0;
    return kernel::aacf(a.bits(), a.length(), tau);
}

int accf(const BinarySequence& a, const BinarySequence& b, int tau) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("cross-correlation of sequences with different lengths");
    }
    const int n = a.length();
    if (tau >= n || tau <= -n) return 0;
    if (tau >= 0) return kernel::accf(a.bits(), b.bits(), n, tau);
    return kernel::accf(b.bits(), a.bits(), n, -tau);
}

std::vector<int> aacf_vector(const BinarySequence& a) {
    std::vector<int> out(static_cast<std::size_t>(a.length()));
    for (int tau = 0; tau < a.length(); ++tau) out[static_cast<std::size_t>(tau)] = aacf(a, tau);
    return out;
}

std::vector<int> aacf_sum_vector(const SequencePair& p) {
    std::vector<int> out(static_cast<std::size_t>(p.length()));
    for (int tau = 0; tau < p.length(); ++tau) {
        out[static_cast<std::size_t>(tau)] = aacf(p.a, tau) + aacf(p.b, tau);
    }
    return out;
}

RhoVector rho_vector(const BinarySequence& a) {
    RhoVector r;
    r.n = a.length();
    const int k = a.length() >= 3 ? (a.length() - 3) / 2 : 0;
    r.values.resize(static_cast<std::size_t>(k));
    for (int tau = 1; tau <= k; ++tau) r.values[static_cast<std::size_t>(tau - 1)] = aacf(a, tau);
    return r;
}

}  // namespace obzcp
