// equivalence.hpp
//
// Interchange, negation and reciprocal act on pairs; together they generate
// a group of 32 transforms. Classification is constant on each orbit, so the
// search and the catalog compare pairs through a canonical orbit member.
#pragma once

#include <array>
#include <vector>

#include "obzcp/sequence.hpp"

namespace obzcp {

BinarySequence negate(const BinarySequence& a);
BinarySequence reverse(const BinarySequence& a);
inline SequencePair swap(const SequencePair& p) { return SequencePair(p.b, p.a); }

// Applied as: reverse each flagged sequence, then negate each flagged
// sequence, then optionally interchange.
struct PairTransform {
    bool reverse_a = false;
    bool reverse_b = false;
    bool negate_a = false;
    bool negate_b = false;
    bool swap = false;

    SequencePair apply(const SequencePair& p) const;

    // (this ∘ other)(p) == this->apply(other.apply(p))
    PairTransform compose(const PairTransform& other) const;

    // Index in [0, 32); bit 0 reverse_a ... bit 4 swap.
    int index() const;
    static PairTransform from_index(int index);

    friend bool operator==(const PairTransform&, const PairTransform&) = default;
};

const std::array<PairTransform, 32>& all_transforms();

// Distinct members of the orbit, sorted ascending.
std::vector<SequencePair> orbit(const SequencePair& p);

// The orbit member minimizing (max(a, b), min(a, b)) over packed integers,
// returned with a >= b.
SequencePair canonical(const SequencePair& p);

// Throws std::invalid_argument when the two pairs differ in length.
bool are_equivalent(const SequencePair& p1, const SequencePair& p2);

}  // namespace obzcp
