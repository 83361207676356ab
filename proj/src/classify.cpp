#include "obzcp/classify.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace obzcp {

std::string_view to_string(Category c) {
    switch (c) {
        case Category::Optimal: return "Optimal";
        case Category::ZOptimal: return "ZOptimal";
        case Category::SubOptimal: return "SubOptimal";
    }
    return "?";
}

Category category_from_string(std::string_view name) {
    if (name == "Optimal") return Category::Optimal;
    if (name == "ZOptimal") return Category::ZOptimal;
    if (name == "SubOptimal") return Category::SubOptimal;
    throw std::invalid_argument("unknown category '" + std::string(name) + "'");
}

int zcz_width(const SequencePair& p) {
    const int n = p.length();
    int z = 1;
    while (z < n && aacf(p.a, z) + aacf(p.b, z) == 0) ++z;
    return z;
}

Classification classify(const SequencePair& p) {
    Classification c;
    c.n = p.length();
    c.zcz_width = zcz_width(p);

    const int first_out = (c.n + 1) / 2;
    bool all_two = true;
    for (int tau = first_out; tau < c.n; ++tau) {
        const int s = std::abs(aacf(p.a, tau) + aacf(p.b, tau));
        if (s > c.max_out_of_zone) c.max_out_of_zone = s;
        if (s != 2) all_two = false;
    }

    if (c.zcz_width == first_out) {
        c.category = all_two ? Category::Optimal : Category::ZOptimal;
    } else {
        c.category = Category::SubOptimal;
    }
    return c;
}

bool check_end_parity(const SequencePair& p) {
    const int n = p.length();
    if (n < 5) throw std::invalid_argument("end parity check needs n >= 5");
    const auto& a = p.a;
    const auto& b = p.b;
    if ((a[0] + a[n - 1] + b[0] + b[n - 1]) % 2 != 0) return false;
    for (int r = 1; r <= (n - 3) / 2; ++r) {
        if ((a[r] + a[n - 1 - r] + b[r] + b[n - 1 - r]) % 2 != 1) return false;
    }
    return true;
}

}  // namespace obzcp
