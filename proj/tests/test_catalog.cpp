#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include "obzcp/catalog.hpp"
#include "obzcp/classify.hpp"
#include "obzcp/equivalence.hpp"

using namespace obzcp;

namespace {

std::string flip_last_hex_bit(std::string hex) {
    char& d = hex.back();
    const int v = (d >= 'A' ? d - 'A' + 10 : d - '0') ^ 1;
    d = static_cast<char>(v < 10 ? '0' + v : 'A' + v - 10);
    return hex;
}

std::string to_text(const Catalog& cat) {
    std::string out;
    for (const auto& e : cat.pairs) {
        out += e.table + ' ' + std::to_string(e.n) + ' ' + e.a_hex + ' ' + e.b_hex + ' ' +
               std::string(to_string(e.expected)) + '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("bundled catalog contents") {
    const auto cat = load_catalog();
    const std::map<std::string, std::size_t> counts = {{"I", 15}, {"II", 18}, {"III", 9}, {"IV", 21},
                                                       {"V", 6},  {"VI", 2},  {"VII", 6}, {"VIII", 29},
                                                       {"IX", 6}, {"X", 6},   {"XI", 6},  {"XII", 16}};
    std::size_t total = 0;
    for (const auto& [id, count] : counts) {
        CHECK_MESSAGE(cat.table(id).size() == count, "table " << id);
        total += count;
    }
    CHECK(total == 140);
    CHECK(cat.pairs.size() == 140);
    CHECK(cat.table_ids().size() == 12);
    CHECK(cat.table_ids().front() == "I");

    REQUIRE(cat.demerits.size() == 24);
    for (std::size_t i = 0; i < cat.demerits.size(); ++i) CHECK(cat.demerits[i].n == 3 + 2 * static_cast<int>(i));

    for (const auto& e : cat.pairs) {
        CHECK_NOTHROW(e.pair());
        CHECK(e.exhaustive == (e.table == "I" || e.table == "II" || e.table == "III" || e.table == "IV" ||
                               e.table == "VI"));
    }
    CHECK(cat.for_length(37).size() == 2);
}

TEST_CASE("every catalog pair verifies") {
    const auto cat = load_catalog();
    const auto report = verify_catalog(cat);
    CHECK(report.ok());
    for (const auto& m : report.mismatches) MESSAGE(m.table << " row " << m.row << ": " << m.detail);
    int checked = 0;
    for (const auto& t : report.tables) {
        CHECK(t.passed == t.checked);
        checked += t.checked;
    }
    CHECK(checked == 164);

    for (const auto& e : cat.pairs) {
        const auto c = classify(e.pair());
        INFO(e.table << " row " << e.row);
        CHECK(c.category == e.expected);
        if (c.category == Category::ZOptimal) CHECK(c.max_out_of_zone <= kZOptimalMaxOutOfZone);
    }
}

TEST_CASE("rows equivalent within a table are reported as findings") {
    // As printed, two rows of the n = 31 table and two rows of the n = 33
    // table belong to the same equivalence class.
    const auto report = verify_catalog(load_catalog());
    REQUIRE(report.findings.size() == 2);
    CHECK(report.findings[0].table == "III");
    CHECK(report.findings[0].row == 8);
    CHECK(report.findings[0].equivalent_to == 7);
    CHECK(report.findings[1].table == "IV");
    CHECK(report.findings[1].row == 11);
    CHECK(report.findings[1].equivalent_to == 9);
    CHECK_FALSE(report.strict_ok());

    const auto cat = load_catalog();
    const auto iii = cat.table("III");
    CHECK(are_equivalent(iii[6].pair(), iii[7].pair()));
    std::set<SequencePair> distinct;
    for (const auto& e : iii) distinct.insert(canonical(e.pair()));
    CHECK(distinct.size() == 8);
    for (const auto& id : {"I", "II", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII"}) {
        std::set<SequencePair> forms;
        const auto rows = cat.table(id);
        for (const auto& e : rows) forms.insert(canonical(e.pair()));
        CHECK_MESSAGE(forms.size() == rows.size(), "table " << id);
    }
}

TEST_CASE("Table XIII rows at the lengths without optimal pairs are Z-optimal") {
    const auto cat = load_catalog();
    for (const auto& d : cat.demerits) {
        const auto c = classify(d.pair()).category;
        INFO("n=" << d.n);
        if (d.n == 35 || d.n == 39 || d.n == 43 || d.n == 45 || d.n == 47) {
            CHECK(c == Category::ZOptimal);
        } else {
            CHECK(c == Category::Optimal);
        }
    }
}

TEST_CASE("a one-bit corruption produces exactly one mismatch") {
    const auto cat = load_catalog();
    for (std::size_t victim : {std::size_t{0}, std::size_t{20}, std::size_t{75}, std::size_t{139}}) {
        auto bad = cat;
        bad.pairs[victim].a_hex = flip_last_hex_bit(bad.pairs[victim].a_hex);
        const auto report = verify_catalog(bad);
        REQUIRE(report.mismatches.size() == 1);
        CHECK(report.mismatches[0].table == cat.pairs[victim].table);
        CHECK(report.mismatches[0].row == cat.pairs[victim].row);
        CHECK(report.mismatches[0].line == cat.pairs[victim].line);
    }

    auto bad = cat;
    bad.demerits[5].psc += 1e-3;
    const auto report = verify_catalog(bad);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].table == "XIII");
    CHECK(report.mismatches[0].row == 6);
    CHECK(report.mismatches[0].detail.find("PSC") != std::string::npos);

    auto wrong_label = cat;
    wrong_label.pairs[3].expected = Category::ZOptimal;
    CHECK(verify_catalog(wrong_label).mismatches.size() == 1);
}

TEST_CASE("parse_catalog") {
    const auto cat = parse_catalog("# comment\n\nI 27 6AC2984 42265F0 Optimal  # trailing\r\nV 35 7905A9444 710C1A3B2 ZOptimal\n");
    REQUIRE(cat.pairs.size() == 2);
    CHECK(cat.pairs[0].line == 3);
    CHECK(cat.pairs[1].row == 1);
    CHECK(cat.pairs[1].expected == Category::ZOptimal);
    CHECK(verify_catalog(cat).ok());

    CHECK(parse_catalog(to_text(load_catalog())).pairs.size() == 140);

    auto line_of = [](std::string_view text) {
        try {
            parse_catalog(text);
        } catch (const CatalogError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("I 27 6AC2984 42265F0\n") == 1);
    CHECK(line_of("\nI 27 6AC2984 42265F0 optimal\n") == 2);
    CHECK(line_of("I 2x 6AC2984 42265F0 Optimal\n") == 1);
    CHECK(line_of("I 27 6AC2984 4226XF0 Optimal\n") == 1);
    CHECK(line_of("I 27 FAC2984 42265F0 Optimal\n") == 1);  // 28 bits at n = 27
    CHECK(line_of("XIII 3 7 5 1.4444 1.1111 1.1111\n") == 1);
    CHECK(line_of("XIII 3 7 5 1.4444 1.1111 1.1111 zero\n") == 1);
    CHECK(line_of("I 27 6AC2984 42265F0 Optimal\n") == -1);
}

TEST_CASE("load_catalog_file") {
    const std::string path = "test_catalog_roundtrip.txt";
    {
        std::ofstream out(path);
        out << to_text(load_catalog());
    }
    CHECK(load_catalog_file(path).pairs.size() == 140);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_catalog_file("no/such/catalog.txt"), CatalogError);
}
