// record.hpp -- result records shared by the CLI subcommands.
//
// Line format: tab-separated, one record per line, '-' for absent fields.
//
//   n  a_hex  b_hex  category  zcz_width  max_out_of_zone  psc  adf_a  adf_b  cdf  chunk
//
// Floating fields use the shortest representation that reads back to the
// same double, so format_record/parse_record round-trip exactly.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obzcp/classify.hpp"
#include "obzcp/demerit.hpp"
#include "obzcp/sequence.hpp"

namespace obzcp {

struct OutputRecord {
    int n = 0;
    std::string a_hex;
    std::string b_hex;
    Category category = Category::SubOptimal;
    int zcz_width = 1;
    int max_out_of_zone = 0;
    std::optional<DemeritReport> demerit;
    std::optional<std::uint64_t> chunk;

    friend bool operator==(const OutputRecord& x, const OutputRecord& y);
};

OutputRecord make_record(const SequencePair& p, bool with_demerit = false,
                         std::optional<std::uint64_t> chunk = std::nullopt);

inline constexpr std::string_view kRecordHeader =
    "n\ta\tb\tcategory\tzcz_width\tmax_out_of_zone\tpsc\tadf_a\tadf_b\tcdf\tchunk";

std::string format_record(const OutputRecord& r);
// Throws std::invalid_argument on malformed lines.
OutputRecord parse_record(std::string_view line);

// Fixed-width table for terminals.
std::string render_table(const std::vector<OutputRecord>& records, bool with_demerit);

}  // namespace obzcp
