#include "obzcp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "obzcp/catalog.hpp"
#include "obzcp/classify.hpp"
#include "obzcp/demerit.hpp"
#include "obzcp/equivalence.hpp"
#include "obzcp/record.hpp"
#include "obzcp/search.hpp"

namespace obzcp::cli {

namespace {

struct PairArgs {
    std::string a_hex;
    std::string b_hex;
    int n = 0;
};

void add_pair_args(CLI::App* cmd, PairArgs& p) {
    cmd->add_option("a", p.a_hex, "first sequence, hex")->required();
    cmd->add_option("b", p.b_hex, "second sequence, hex")->required();
    cmd->add_option("n", p.n, "sequence length (odd)")->required();
}

int default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint8_t parse_cases(const std::string& text) {
    if (text == "all") return kAllCases;
    std::uint8_t mask = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 1 || item[0] < '0' || item[0] > '7') {
            throw CLI::ValidationError("--cases", "expected 'all' or comma-separated indices 0-7, got '" + text + "'");
        }
        mask |= static_cast<std::uint8_t>(1u << (item[0] - '0'));
    }
    if (mask == 0) throw CLI::ValidationError("--cases", "no cases given");
    return mask;
}

std::pair<std::uint64_t, std::uint64_t> parse_chunks(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--chunks", "expected lo..hi, got '" + text + "'");
    try {
        std::size_t used = 0;
        const std::string lo_s = text.substr(0, dots);
        const std::string hi_s = text.substr(dots + 2);
        const std::uint64_t lo = std::stoull(lo_s, &used);
        if (used != lo_s.size()) throw std::invalid_argument(lo_s);
        const std::uint64_t hi = std::stoull(hi_s, &used);
        if (used != hi_s.size()) throw std::invalid_argument(hi_s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--chunks", "expected lo..hi, got '" + text + "'");
    }
}

std::string format_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Runs a subcommand body, mapping bad input to the usage exit code.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

struct SearchOptions {
    int n = 0;
    int max_acc = 2;
    std::string cases = "all";
    std::string chunks;
    int workers = 1;
    std::string format = "table";
    bool demerit = false;
    bool header = false;
    bool recompute = false;
    bool quiet = false;
    double progress_interval = 2.0;
};

int cmd_search(const SearchOptions& o, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.n = o.n;
    cfg.max_acc = o.max_acc;
    cfg.case_mask = parse_cases(o.cases);
    cfg.workers = o.workers;
    cfg.rho_update = o.recompute ? RhoUpdate::Recompute : RhoUpdate::Incremental;
    if (!o.chunks.empty()) {
        std::tie(cfg.chunk_lo, cfg.chunk_hi) = parse_chunks(o.chunks);
        if (cfg.chunk_lo == 0 && cfg.chunk_hi == 0) throw std::invalid_argument("--chunks range is empty");
    }
    cfg.validate();
    const std::uint64_t end = cfg.range_end();

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto last = start;
    auto report = [&](const ChunkProgress& p, bool force) {
        if (o.quiet) return;
        const auto now = clock::now();
        if (!force && std::chrono::duration<double>(now - last).count() < o.progress_interval) return;
        last = now;
        const double elapsed = std::chrono::duration<double>(now - start).count();
        char buf[256];
        std::snprintf(buf, sizeof buf, "progress: %llu/%llu chunks (%.1f%%), %.2f chunks/s, %zu raw hits\n",
                      static_cast<unsigned long long>(p.done), static_cast<unsigned long long>(p.total),
                      100.0 * static_cast<double>(p.done) / static_cast<double>(p.total),
                      elapsed > 0 ? static_cast<double>(p.done) / elapsed : 0.0, p.raw_hits);
        err << buf;
        if (p.resume_from < end) {
            err << "checkpoint: n=" << cfg.n << " resume with --chunks " << p.resume_from << ".." << end << '\n';
        }
    };

    SearchResult result;
    try {
        result = run_search(cfg, [&](const ChunkProgress& p) { report(p, p.done == p.total); });
    } catch (const SearchResourceError& e) {
        err << "error: " << e.what() << '\n';
        err << "checkpoint: n=" << cfg.n << " resume with --chunks " << e.resume_from() << ".." << end << '\n';
        return kResourceExhausted;
    }

    std::vector<OutputRecord> records;
    records.reserve(result.pairs.size());
    for (const auto& f : result.pairs) records.push_back(make_record(f.pair, o.demerit, f.chunk));

    if (o.format == "tsv") {
        if (o.header) out << kRecordHeader << '\n';
        for (const auto& r : records) out << format_record(r) << '\n';
    } else {
        out << render_table(records, o.demerit);
        out << records.size() << " non-equivalent pair(s)\n";
    }
    if (!o.quiet) {
        err << "done: n=" << cfg.n << " chunks " << cfg.chunk_lo << ".." << end << ", "
            << result.stats.map_insertions << " map insertions, " << result.stats.verified << " verifications, "
            << result.pairs.size() << " classes\n";
    }
    return kSuccess;
}

int cmd_verify(const PairArgs& a, const std::string& format, const std::string& expect, std::ostream& out) {
    const SequencePair p = decode_pair(a.a_hex, a.b_hex, a.n);
    const OutputRecord r = make_record(p);
    if (format == "tsv") {
        out << format_record(r) << '\n';
    } else {
        out << "n                " << r.n << '\n'
            << "a                " << r.a_hex << '\n'
            << "b                " << r.b_hex << '\n'
            << "category         " << to_string(r.category) << '\n'
            << "zcz_width        " << r.zcz_width << " (max " << (r.n + 1) / 2 << ")\n"
            << "max_out_of_zone  " << r.max_out_of_zone << '\n'
            << "end_parity       " << (r.n < 5 ? "n/a" : check_end_parity(p) ? "pass" : "fail") << '\n';
    }
    if (!expect.empty() && category_from_string(expect) != r.category) return kMismatch;
    return kSuccess;
}

int cmd_demerit(const PairArgs& a, std::ostream& out) {
    const DemeritReport r = psc(decode_pair(a.a_hex, a.b_hex, a.n));
    out << "PSC     " << format_g6(r.psc) << '\n'
        << "ADF(a)  " << format_g6(r.adf_a) << '\n'
        << "ADF(b)  " << format_g6(r.adf_b) << '\n'
        << "CDF     " << format_g6(r.cdf) << '\n';
    return kSuccess;
}

int cmd_acf_dump(const PairArgs& a, const std::string& format, std::ostream& out) {
    const SequencePair p = decode_pair(a.a_hex, a.b_hex, a.n);
    if (format == "csv") out << "tau,rho_a,rho_b,sum,abs_sum\n";
    else out << "tau  rho_a  rho_b  sum  |sum|\n";
    for (int tau = 0; tau < p.length(); ++tau) {
        const int ra = aacf(p.a, tau);
        const int rb = aacf(p.b, tau);
        const int s = ra + rb;
        char buf[128];
        if (format == "csv") {
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d\n", tau, ra, rb, s, s < 0 ? -s : s);
        } else {
            std::snprintf(buf, sizeof buf, "%3d  %5d  %5d  %3d  %5d\n", tau, ra, rb, s, s < 0 ? -s : s);
        }
        out << buf;
    }
    return kSuccess;
}

int cmd_canon(const PairArgs& a, std::ostream& out) {
    const SequencePair p = decode_pair(a.a_hex, a.b_hex, a.n);
    const SequencePair c = canonical(p);
    out << "canonical   " << encode_hex(c.a) << ' ' << encode_hex(c.b) << '\n'
        << "orbit_size  " << orbit(p).size() << '\n';
    return kSuccess;
}

int cmd_catalog_check(const std::string& file, bool verbose, bool strict, std::ostream& out, std::ostream& err) {
    Catalog cat;
    try {
        cat = file.empty() ? load_catalog() : load_catalog_file(file);
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    }
    const CatalogReport report = verify_catalog(cat);
    for (const auto& t : report.tables) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "table %-5s %3d/%-3d %s\n", t.table.c_str(), t.passed, t.checked,
                      t.passed == t.checked ? "ok" : "MISMATCH");
        out << buf;
    }
    for (const auto& m : report.mismatches) {
        out << "mismatch: table " << m.table << " row " << m.row << " (line " << m.line << "): " << m.detail << '\n';
    }
    for (const auto& f : report.findings) {
        out << "finding: table " << f.table << " row " << f.row << " (line " << f.line << ") is equivalent to row "
            << f.equivalent_to << '\n';
    }
    if (verbose) {
        for (const auto& e : cat.pairs) {
            const auto c = classify(e.pair());
            out << e.table << '\t' << e.n << '\t' << e.a_hex << '\t' << e.b_hex << '\t' << to_string(c.category)
                << '\t' << c.zcz_width << '\t' << c.max_out_of_zone << '\n';
        }
    }
    out << (cat.pairs.size() + cat.demerits.size()) << " records, " << report.mismatches.size() << " mismatch(es), "
        << report.findings.size() << " finding(s)\n";
    return (strict ? report.strict_ok() : report.ok()) ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Search and verification tools for odd-length binary Z-complementary pairs"};
    app.name(args.empty() ? "obzcp" : args.front());
    app.require_subcommand(1);

    SearchOptions so;
    so.workers = default_workers();
    auto* search = app.add_subcommand("search", "exhaustive search at one odd length");
    search->add_option("n", so.n, "sequence length (odd, >= 5)")->required();
    search->add_option("--max-acc", so.max_acc, "largest allowed out-of-zone |sum| (even, >= 2)");
    search->add_option("--cases", so.cases, "'all' or comma-separated case indices 0-7 (lsb<<2 | mid_a<<1 | mid_b)");
    search->add_option("--chunks", so.chunks, "half-open chunk range lo..hi");
    search->add_option("--workers", so.workers, std::string("worker threads (default $") + kWorkersEnv + " or all cores)");
    search->add_option("--format", so.format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));
    search->add_flag("--demerit", so.demerit, "add PSC/ADF/CDF to every record");
    search->add_flag("--header", so.header, "start tsv output with a column header line");
    search->add_flag("--recompute-rho", so.recompute, "recompute rho_b at every Gray step instead of updating it");
    search->add_flag("-q,--quiet", so.quiet, "no progress on stderr");
    search->add_option("--progress-interval", so.progress_interval, "seconds between progress lines");

    PairArgs verify_args;
    std::string verify_format = "table";
    std::string verify_expect;
    auto* verify = app.add_subcommand("verify", "classify one pair");
    add_pair_args(verify, verify_args);
    verify->add_option("--format", verify_format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));
    verify->add_option("--expect", verify_expect, "exit 1 unless the category matches")
        ->check(CLI::IsMember({"Optimal", "ZOptimal", "SubOptimal"}));

    PairArgs demerit_args;
    auto* demerit = app.add_subcommand("demerit", "Pursley-Sarwate demerit factors of one pair");
    add_pair_args(demerit, demerit_args);

    PairArgs dump_args;
    std::string dump_format = "csv";
    auto* dump = app.add_subcommand("acf-dump", "per-shift AACF values and sums of one pair");
    add_pair_args(dump, dump_args);
    dump->add_option("--format", dump_format, "csv or table")->check(CLI::IsMember({"csv", "table"}));

    PairArgs canon_args;
    auto* canon = app.add_subcommand("canon", "canonical representative of a pair's equivalence class");
    add_pair_args(canon, canon_args);

    std::string catalog_file;
    bool catalog_verbose = false;
    auto* catalog = app.add_subcommand("catalog-check", "re-verify the bundled (or a given) catalog");
    catalog->add_option("--file", catalog_file, "catalog file to check instead of the bundled one");
    catalog->add_flag("-v,--verbose", catalog_verbose, "print every record's verdict");
    bool catalog_strict = false;
    catalog->add_flag("--strict", catalog_strict, "also fail on rows equivalent to an earlier row of the same table");

    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    if (*search) {
        return guarded(err, [&] {
            try {
                return cmd_search(so, out, err);
            } catch (const CLI::ValidationError& e) {
                err << "error: " << e.what() << '\n';
                return static_cast<int>(kUsage);
            }
        });
    }
    if (*verify) return guarded(err, [&] { return cmd_verify(verify_args, verify_format, verify_expect, out); });
    if (*demerit) return guarded(err, [&] { return cmd_demerit(demerit_args, out); });
    if (*dump) return guarded(err, [&] { return cmd_acf_dump(dump_args, dump_format, out); });
    if (*canon) return guarded(err, [&] { return cmd_canon(canon_args, out); });
    if (*catalog) return cmd_catalog_check(catalog_file, catalog_verbose, catalog_strict, out, err);
    return kUsage;
}

}  // namespace obzcp::cli
