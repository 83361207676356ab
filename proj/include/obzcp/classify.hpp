// classify.hpp -- ZCZ width and optimality verdicts for odd-length pairs.
#pragma once

#include <string_view>

#include "obzcp/sequence.hpp"

namespace obzcp {

enum class Category { Optimal, ZOptimal, SubOptimal };

std::string_view to_string(Category c);
// Throws std::invalid_argument on unknown names.
Category category_from_string(std::string_view name);

struct Classification {
    int n = 0;
    int zcz_width = 1;
    // max |rho_a(tau) + rho_b(tau)| over tau = (n+1)/2 .. n-1, whatever the
    // actual zone width is.
    int max_out_of_zone = 0;
    Category category = Category::SubOptimal;

    friend bool operator==(const Classification&, const Classification&) = default;
};

// Largest Z with zero AACF sums on 1 <= tau <= Z-1 (capped at n).
int zcz_width(const SequencePair& p);

Classification classify(const SequencePair& p);

// a_0 + a_{n-1} + b_0 + b_{n-1} even, and a_r + a_{n-1-r} + b_r + b_{n-1-r}
// odd for 1 <= r <= (n-3)/2. Every Z-optimal pair satisfies this.
// Throws std::invalid_argument for n < 5.
bool check_end_parity(const SequencePair& p);

}  // namespace obzcp
