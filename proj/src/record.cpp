#include "obzcp/record.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace obzcp {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

template <class T>
T parse_number(std::string_view s, const char* field) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::invalid_argument(std::string("record field ") + field + ": bad value '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto tab = line.find('\t', pos);
        out.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
        if (tab == std::string_view::npos) break;
        pos = tab + 1;
    }
    return out;
}

}  // namespace

bool operator==(const OutputRecord& x, const OutputRecord& y) {
    auto same_demerit = [](const std::optional<DemeritReport>& p, const std::optional<DemeritReport>& q) {
        if (p.has_value() != q.has_value()) return false;
        if (!p) return true;
        return p->psc == q->psc && p->adf_a == q->adf_a && p->adf_b == q->adf_b && p->cdf == q->cdf;
    };
    return x.n == y.n && x.a_hex == y.a_hex && x.b_hex == y.b_hex && x.category == y.category &&
           x.zcz_width == y.zcz_width && x.max_out_of_zone == y.max_out_of_zone && same_demerit(x.demerit, y.demerit) &&
           x.chunk == y.chunk;
}

OutputRecord make_record(const SequencePair& p, bool with_demerit, std::optional<std::uint64_t> chunk) {
    const Classification c = classify(p);
    OutputRecord r;
    r.n = p.length();
    r.a_hex = encode_hex(p.a);
    r.b_hex = encode_hex(p.b);
    r.category = c.category;
    r.zcz_width = c.zcz_width;
    r.max_out_of_zone = c.max_out_of_zone;
    if (with_demerit) r.demerit = psc(p);
    r.chunk = chunk;
    return r;
}

std::string format_record(const OutputRecord& r) {
    std::string out = std::to_string(r.n);
    auto field = [&](const std::string& s) {
        out += '\t';
        out += s;
    };
    field(r.a_hex);
    field(r.b_hex);
    field(std::string(to_string(r.category)));
    field(std::to_string(r.zcz_width));
    field(std::to_string(r.max_out_of_zone));
    if (r.demerit) {
        field(shortest(r.demerit->psc));
        field(shortest(r.demerit->adf_a));
        field(shortest(r.demerit->adf_b));
        field(shortest(r.demerit->cdf));
    } else {
        for (int i = 0; i < 4; ++i) field("-");
    }
    field(r.chunk ? std::to_string(*r.chunk) : std::string("-"));
    return out;
}

OutputRecord parse_record(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto f = split_tabs(line);
    if (f.size() != 11) {
        throw std::invalid_argument("record needs 11 tab-separated fields, got " + std::to_string(f.size()));
    }
    OutputRecord r;
    r.n = parse_number<int>(f[0], "n");
    r.a_hex = std::string(f[1]);
    r.b_hex = std::string(f[2]);
    decode_pair(r.a_hex, r.b_hex, r.n);
    r.category = category_from_string(f[3]);
    r.zcz_width = parse_number<int>(f[4], "zcz_width");
    r.max_out_of_zone = parse_number<int>(f[5], "max_out_of_zone");
    const bool has_demerit = f[6] != "-";
    for (int i = 7; i < 10; ++i) {
        if ((f[static_cast<std::size_t>(i)] != "-") != has_demerit) {
            throw std::invalid_argument("demerit fields must be all present or all '-'");
        }
    }
    if (has_demerit) {
        r.demerit = DemeritReport{parse_number<double>(f[7], "adf_a"), parse_number<double>(f[8], "adf_b"),
                                  parse_number<double>(f[9], "cdf"), parse_number<double>(f[6], "psc")};
    }
    if (f[10] != "-") r.chunk = parse_number<std::uint64_t>(f[10], "chunk");
    return r;
}

std::string render_table(const std::vector<OutputRecord>& records, bool with_demerit) {
    std::size_t width = 1;
    for (const auto& r : records) width = std::max({width, r.a_hex.size(), r.b_hex.size()});
    const int w = static_cast<int>(width);

    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%3s  %-*s  %-*s  %-10s  %3s  %3s", "n", w, "a", w, "b", "category", "Z", "max");
    out += buf;
    if (with_demerit) {
        std::snprintf(buf, sizeof buf, "  %-9s  %-9s  %-9s  %-9s", "PSC", "ADF(a)", "ADF(b)", "CDF");
        out += buf;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%3d  %-*s  %-*s  %-10s  %3d  %3d", r.n, w, r.a_hex.c_str(), w,
                      r.b_hex.c_str(), std::string(to_string(r.category)).c_str(), r.zcz_width, r.max_out_of_zone);
        out += buf;
        if (with_demerit && r.demerit) {
            std::snprintf(buf, sizeof buf, "  %-9.6g  %-9.6g  %-9.6g  %-9.6g", r.demerit->psc, r.demerit->adf_a,
                          r.demerit->adf_b, r.demerit->cdf);
            out += buf;
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace obzcp
