// catalog.hpp
//
// Published pairs and demerit rows, bundled with the library, plus a
// regression harness that re-derives every verdict.
//
// File format (data/catalog.txt): one record per line, whitespace-separated,
// '#' starts a comment.
//
//   <table> <n> <a_hex> <b_hex> <Optimal|ZOptimal|SubOptimal>
//   XIII    <n> <g1_hex> <g2_hex> <psc> <adf_g1> <adf_g2> <cdf>
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "obzcp/classify.hpp"
#include "obzcp/sequence.hpp"

namespace obzcp {

inline constexpr double kDemeritTolerance = 5e-5;
inline constexpr int kZOptimalMaxOutOfZone = 6;
inline constexpr std::string_view kDemeritTable = "XIII";

struct CatalogEntry {
    std::string table;
    int n = 0;
    std::string a_hex;
    std::string b_hex;
    Category expected = Category::Optimal;
    bool exhaustive = false;  // the table is taken as the complete class list for n
    int line = 0;
    int row = 0;              // 1-based position within its table

    SequencePair pair() const { return decode_pair(a_hex, b_hex, n); }
};

struct DemeritEntry {
    int n = 0;
    std::string g1_hex;
    std::string g2_hex;
    double psc = 0.0;
    double adf1 = 0.0;
    double adf2 = 0.0;
    double cdf = 0.0;
    int line = 0;

    SequencePair pair() const { return decode_pair(g1_hex, g2_hex, n); }
};

struct Catalog {
    std::vector<CatalogEntry> pairs;
    std::vector<DemeritEntry> demerits;

    std::vector<CatalogEntry> table(std::string_view id) const;
    std::vector<CatalogEntry> for_length(int n) const;
    // Table ids in order of first appearance.
    std::vector<std::string> table_ids() const;
};

class CatalogError : public std::runtime_error {
public:
    CatalogError(int line, const std::string& what)
        : std::runtime_error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Tables whose lists are treated as exhaustive for their length.
bool is_exhaustive_table(std::string_view table);

// Throws CatalogError on malformed records (including undecodable hex).
Catalog parse_catalog(std::string_view text);
Catalog load_catalog();
Catalog load_catalog_file(const std::filesystem::path& path);

struct CatalogMismatch {
    std::string table;
    int row = 0;
    int line = 0;
    std::string detail;  // every failed check for this record, '; '-separated
};

// A row equivalent to an earlier row of the same table. Reported separately
// from mismatches: the pair itself still verifies.
struct CatalogFinding {
    std::string table;
    int row = 0;
    int line = 0;
    int equivalent_to = 0;  // earlier row
};

struct TableSummary {
    std::string table;
    int checked = 0;
    int passed = 0;
};

struct CatalogReport {
    std::vector<TableSummary> tables;
    std::vector<CatalogMismatch> mismatches;
    std::vector<CatalogFinding> findings;

    bool ok() const { return mismatches.empty(); }
    bool strict_ok() const { return ok() && findings.empty(); }
};

CatalogReport verify_catalog(const Catalog& catalog);

}  // namespace obzcp
