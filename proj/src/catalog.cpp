#include "obzcp/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "obzcp/demerit.hpp"
#include "obzcp/equivalence.hpp"

namespace obzcp {

namespace detail {
extern const std::string_view kBundledCatalog;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view s, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw CatalogError(line, "bad integer '" + std::string(s) + "'");
    return v;
}

double parse_double(std::string_view s, int line) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw CatalogError(line, "bad number '" + std::string(s) + "'");
    return v;
}

void check_decodes(std::string_view a, std::string_view b, int n, int line) {
    try {
        decode_pair(a, b, n);
    } catch (const std::invalid_argument& e) {
        throw CatalogError(line, e.what());
    }
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

bool is_exhaustive_table(std::string_view table) {
    return table == "I" || table == "II" || table == "III" || table == "IV" || table == "VI";
}

std::vector<CatalogEntry> Catalog::table(std::string_view id) const {
    std::vector<CatalogEntry> out;
    for (const auto& e : pairs) {
        if (e.table == id) out.push_back(e);
    }
    return out;
}

std::vector<CatalogEntry> Catalog::for_length(int n) const {
    std::vector<CatalogEntry> out;
    for (const auto& e : pairs) {
        if (e.n == n) out.push_back(e);
    }
    return out;
}

std::vector<std::string> Catalog::table_ids() const {
    std::vector<std::string> ids;
    for (const auto& e : pairs) {
        if (std::find(ids.begin(), ids.end(), e.table) == ids.end()) ids.push_back(e.table);
    }
    return ids;
}

Catalog parse_catalog(std::string_view text) {
    Catalog cat;
    std::map<std::string, int, std::less<>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto f = split_fields(line);
        if (f.empty()) continue;

        if (f[0] == kDemeritTable) {
            if (f.size() != 8) throw CatalogError(line_no, "demerit record needs 8 fields");
            DemeritEntry d;
            d.n = parse_int(f[1], line_no);
            d.g1_hex = std::string(f[2]);
            d.g2_hex = std::string(f[3]);
            d.psc = parse_double(f[4], line_no);
            d.adf1 = parse_double(f[5], line_no);
            d.adf2 = parse_double(f[6], line_no);
            d.cdf = parse_double(f[7], line_no);
            d.line = line_no;
            check_decodes(d.g1_hex, d.g2_hex, d.n, line_no);
            cat.demerits.push_back(std::move(d));
            continue;
        }

        if (f.size() != 5) throw CatalogError(line_no, "pair record needs 5 fields");
        CatalogEntry e;
        e.table = std::string(f[0]);
        e.n = parse_int(f[1], line_no);
        e.a_hex = std::string(f[2]);
        e.b_hex = std::string(f[3]);
        try {
            e.expected = category_from_string(f[4]);
        } catch (const std::invalid_argument& ex) {
            throw CatalogError(line_no, ex.what());
        }
        e.exhaustive = is_exhaustive_table(e.table);
        e.line = line_no;
        e.row = ++rows[e.table];
        check_decodes(e.a_hex, e.b_hex, e.n, line_no);
        cat.pairs.push_back(std::move(e));
    }
    return cat;
}

Catalog load_catalog() { return parse_catalog(detail::kBundledCatalog); }

Catalog load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError(0, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

CatalogReport verify_catalog(const Catalog& catalog) {
    CatalogReport report;
    std::map<std::string, std::size_t> summary_index;
    auto summary = [&](const std::string& table) -> TableSummary& {
        auto [it, inserted] = summary_index.try_emplace(table, report.tables.size());
        if (inserted) report.tables.push_back(TableSummary{table, 0, 0});
        return report.tables[it->second];
    };

    std::map<std::string, std::vector<std::pair<SequencePair, int>>> seen;  // canonical forms per table
    for (const auto& e : catalog.pairs) {
        const SequencePair p = e.pair();
        const Classification c = classify(p);
        std::string detail;
        auto fail = [&](const std::string& what) {
            if (!detail.empty()) detail += "; ";
            detail += what;
        };

        if (c.category != e.expected) {
            fail("expected " + std::string(to_string(e.expected)) + ", got " + std::string(to_string(c.category)) +
                 " (Z=" + std::to_string(c.zcz_width) + ", max=" + std::to_string(c.max_out_of_zone) + ")");
        }
        if (e.expected == Category::ZOptimal && c.max_out_of_zone > kZOptimalMaxOutOfZone) {
            fail("out-of-zone magnitude " + std::to_string(c.max_out_of_zone) + " exceeds " +
                 std::to_string(kZOptimalMaxOutOfZone));
        }
        if (p.length() >= 5 && !check_end_parity(p)) fail("end parity violated");

        const SequencePair canon = canonical(p);
        for (const auto& [other, row] : seen[e.table]) {
            if (other == canon) report.findings.push_back(CatalogFinding{e.table, e.row, e.line, row});
        }
        seen[e.table].emplace_back(canon, e.row);

        auto& s = summary(e.table);
        ++s.checked;
        if (detail.empty()) {
            ++s.passed;
        } else {
            report.mismatches.push_back(CatalogMismatch{e.table, e.row, e.line, detail});
        }
    }

    int row = 0;
    for (const auto& d : catalog.demerits) {
        ++row;
        const SequencePair p = d.pair();
        const DemeritReport r = psc(p);
        std::string detail;
        auto check = [&](const char* name, double got, double printed) {
            if (std::abs(got - printed) > kDemeritTolerance) {
                if (!detail.empty()) detail += "; ";
                detail += std::string(name) + " " + format_value(got) + " vs printed " + format_value(printed);
            }
        };
        check("PSC", r.psc, d.psc);
        check("ADF(g1)", r.adf_a, d.adf1);
        check("ADF(g2)", r.adf_b, d.adf2);
        check("CDF", r.cdf, d.cdf);
        if (classify(p).category == Category::SubOptimal) {
            if (!detail.empty()) detail += "; ";
            detail += "pair is not Z-optimal";
        }

        auto& s = summary(std::string(kDemeritTable));
        ++s.checked;
        if (detail.empty()) {
            ++s.passed;
        } else {
            report.mismatches.push_back(CatalogMismatch{std::string(kDemeritTable), row, d.line, detail});
        }
    }
    return report;
}

}  // namespace obzcp
