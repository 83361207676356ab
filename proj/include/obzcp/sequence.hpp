// sequence.hpp
//
// Packed binary sequences and their aperiodic correlations.
//
// Bit convention: bit i of the packed word is element a_i (LSB = a_0).
// Correlations use the (-1)^bit mapping, so for 0 <= tau < n
//
//   rho_a(tau) = (n - tau) - 2 * popcount((a ^ (a >> tau)) & low_mask(n - tau))
//
// which is one shift, one xor, one and, one popcount per lag.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace obzcp {

inline constexpr int kMaxLength = 63;

inline constexpr std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

class BinarySequence {
public:
    BinarySequence() = default;

    // Throws std::invalid_argument unless n is odd, 1 <= n <= kMaxLength and
    // bits has nothing set at or above position n.
    BinarySequence(int n, std::uint64_t bits);

    int length() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int operator[](int i) const { return static_cast<int>((bits_ >> i) & 1u); }
    int weight() const { return __builtin_popcountll(bits_); }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;
    // Orders by length, then by packed integer value.
    friend std::strong_ordering operator<=>(const BinarySequence&, const BinarySequence&) = default;

private:
    int n_ = 1;
    std::uint64_t bits_ = 0;
};

struct SequencePair {
    BinarySequence a;
    BinarySequence b;

    SequencePair() = default;
    // Throws std::invalid_argument on a length mismatch.
    SequencePair(BinarySequence first, BinarySequence second);

    int length() const { return a.length(); }

    friend bool operator==(const SequencePair&, const SequencePair&) = default;
    friend std::strong_ordering operator<=>(const SequencePair&, const SequencePair&) = default;
};

// Truncated AACF (rho(1), ..., rho((n-3)/2)), the key of the search map.
struct RhoVector {
    int n = 0;
    std::vector<int> values;  // values[t - 1] == rho(t)

    int at(int tau) const { return values.at(static_cast<std::size_t>(tau - 1)); }
    friend bool operator==(const RhoVector&, const RhoVector&) = default;
};

// Hex codec. decode accepts upper or lower case digits and leading zeros;
// encode produces uppercase without leading zeros ("0" for the zero word).
BinarySequence decode_hex(std::string_view text, int n);
std::string encode_hex(const BinarySequence& seq);
SequencePair decode_pair(std::string_view a_hex, std::string_view b_hex, int n);

// Renders a_{n-1} ... a_0, i.e. the hex value written out in binary.
std::string to_binary_string(const BinarySequence& seq);

int aacf(const BinarySequence& a, int tau);
// Throws std::invalid_argument on a length mismatch.
int accf(const BinarySequence& a, const BinarySequence& b, int tau);

// Entry tau (0 <= tau < n) is rho_a(tau) + rho_b(tau).
std::vector<int> aacf_sum_vector(const SequencePair& p);

// Full AACF rho(0..n-1).
std::vector<int> aacf_vector(const BinarySequence& a);

RhoVector rho_vector(const BinarySequence& a);

namespace kernel {

// Word-level forms used by the search hot loops. `bits` must be a valid
// length-n word; callers guarantee 0 <= tau < n.
inline int aacf(std::uint64_t bits, int n, int tau) {
    const std::uint64_t diff = (bits ^ (bits >> tau)) & low_mask(n - tau);
    return (n - tau) - 2 * __builtin_popcountll(diff);
}

inline int accf(std::uint64_t a, std::uint64_t b, int n, int tau) {
    const std::uint64_t diff = (a ^ (b >> tau)) & low_mask(n - tau);
    return (n - tau) - 2 * __builtin_popcountll(diff);
}

// Reverses the low `width` bits of x; higher bits are discarded.
inline std::uint64_t reverse_bits(std::uint64_t x, int width) {
    if (width == 0) return 0;
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = __builtin_bswap64(x);
    return x >> (64 - width);
}

}  // namespace kernel

}  // namespace obzcp
