#include "obzcp/equivalence.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace obzcp {

BinarySequence negate(const BinarySequence& a) {
    return BinarySequence(a.length(), ~a.bits() & low_mask(a.length()));
}

BinarySequence reverse(const BinarySequence& a) {
    return BinarySequence(a.length(), kernel::reverse_bits(a.bits(), a.length()));
}

SequencePair PairTransform::apply(const SequencePair& p) const {
    BinarySequence a = p.a;
    BinarySequence b = p.b;
    if (reverse_a) a = reverse(a);
    if (reverse_b) b = reverse(b);
    if (negate_a) a = negate(a);
    if (negate_b) b = negate(b);
    return swap ? SequencePair(b, a) : SequencePair(a, b);
}

PairTransform PairTransform::compose(const PairTransform& other) const {
    // Reverse and negate commute on a single sequence, so the per-slot flags
    // of `other` are XORed with this transform's flags for the slot they land in.
    PairTransform out;
    const bool ra = other.swap ? reverse_b : reverse_a;
    const bool rb = other.swap ? reverse_a : reverse_b;
    const bool na = other.swap ? negate_b : negate_a;
    const bool nb = other.swap ? negate_a : negate_b;
    out.reverse_a = other.reverse_a != ra;
    out.reverse_b = other.reverse_b != rb;
    out.negate_a = other.negate_a != na;
    out.negate_b = other.negate_b != nb;
    out.swap = other.swap != swap;
    return out;
}

int PairTransform::index() const {
    return (reverse_a ? 1 : 0) | (reverse_b ? 2 : 0) | (negate_a ? 4 : 0) | (negate_b ? 8 : 0) |
           (swap ? 16 : 0);
}

PairTransform PairTransform::from_index(int index) {
    if (index < 0 || index >= 32) throw std::out_of_range("transform index outside [0, 32)");
    PairTransform t;
    t.reverse_a = (index & 1) != 0;
    t.reverse_b = (index & 2) != 0;
    t.negate_a = (index & 4) != 0;
    t.negate_b = (index & 8) != 0;
    t.swap = (index & 16) != 0;
    return t;
}

const std::array<PairTransform, 32>& all_transforms() {
    static const std::array<PairTransform, 32> table = [] {
        std::array<PairTransform, 32> t{};
        for (int i = 0; i < 32; ++i) t[static_cast<std::size_t>(i)] = PairTransform::from_index(i);
        return t;
    }();
    return table;
}

namespace {

struct PairHash {
    std::size_t operator()(const SequencePair& p) const {
        return std::hash<std::uint64_t>{}(p.a.bits() * 0x9E3779B97F4A7C15ULL ^ p.b.bits());
    }
};

}  // namespace

std::vector<SequencePair> orbit(const SequencePair& p) {
    std::unordered_set<SequencePair, PairHash> seen;
    for (const auto& t : all_transforms()) seen.insert(t.apply(p));
    std::vector<SequencePair> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

SequencePair canonical(const SequencePair& p) {
    SequencePair best;
    bool have = false;
    for (const auto& t : all_transforms()) {
        SequencePair q = t.apply(p);
        if (q.a < q.b) continue;  // the swapped transform covers this member
        if (!have || q < best) {
            best = q;
            have = true;
        }
    }
    return best;
}

bool are_equivalent(const SequencePair& p1, const SequencePair& p2) {
    if (p1.length() != p2.length()) {
        throw std::invalid_argument("equivalence test on pairs of different lengths");
    }
    return canonical(p1) == canonical(p2);
}

}  // namespace obzcp
