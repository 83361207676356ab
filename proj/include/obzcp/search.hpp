// search.hpp
//
// Exhaustive search for Z-optimal odd-length pairs in O(2^n) time.
//
// Pairs are normalized to a_{n-1} = b_{n-1} = 1, which forces a_0 = b_0 via
// the end parity condition. The remaining free bits are the two middle bits
// and the common first bit: eight cases. Within a case, sequences a are
// grouped into chunks by c_r = a_r ^ a_{n-1-r} (r = 1..k, k = (n-3)/2). For
// each chunk:
//
//   1. all 2^k sequences a of the chunk go into a map keyed by
//      (-rho_a(1), ..., -rho_a(k));
//   2. the lower half of b runs through a reflected Gray code, the upper
//      half is fixed by the parity condition (so b lies in the complement
//      chunk), rho_b is maintained incrementally in key form, and every a
//      found under it is fully verified.
//
// Chunks are independent; they are the unit of parallel work and of
// sharding/resume.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "obzcp/rho_map.hpp"
#include "obzcp/sequence.hpp"

namespace obzcp {

// (a_0 = b_0, a_{(n-1)/2}, b_{(n-1)/2}); index = lsb << 2 | mid_a << 1 | mid_b.
struct SearchCase {
    int lsb = 0;
    int mid_a = 0;
    int mid_b = 0;

    int index() const { return lsb << 2 | mid_a << 1 | mid_b; }
    static SearchCase from_index(int index);
    friend bool operator==(const SearchCase&, const SearchCase&) = default;
};

inline constexpr std::uint8_t kAllCases = 0xFF;

enum class RhoUpdate {
    Incremental,  // two single-bit updates per Gray step
    Recompute,    // full popcount recomputation per step (debug / oracle runs)
};

// Optional pruning on (weight(a), weight(b)); returning false skips the
// candidate. Unset by default.
using WeightFilter = std::function<bool(int weight_a, int weight_b)>;

struct SearchConfig {
    int n = 0;
    int max_acc = 2;
    std::uint8_t case_mask = kAllCases;
    std::uint64_t chunk_lo = 0;
    std::uint64_t chunk_hi = 0;  // exclusive; 0 together with chunk_lo == 0 means "all"
    int workers = 1;
    RhoUpdate rho_update = RhoUpdate::Incremental;
    WeightFilter weight_filter;

    int half_width() const { return (n - 3) / 2; }
    std::uint64_t chunk_count() const { return std::uint64_t{1} << half_width(); }
    std::uint64_t range_end() const { return chunk_hi == 0 && chunk_lo == 0 ? chunk_count() : chunk_hi; }

    // Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct Chunk {
    int width = 0;           // (n-3)/2
    std::uint64_t bits = 0;  // bit r-1 holds c_r
    friend bool operator==(const Chunk&, const Chunk&) = default;
};

Chunk chunk_of(const BinarySequence& a);

// a = (lsb, g, mid, reversed upper half, 1) where a_{n-1-r} = g_r ^ c_r.
// Bit r-1 of g holds a_r.
BinarySequence build_a(std::uint64_t g, Chunk c, int lsb, int mid);

// Upper half of b for the given lower half: bit r-1 of the result holds
// b_{n-1-r} = 1 ^ c_r ^ b_r.
std::uint64_t derive_b_upper(std::uint64_t b_lower, Chunk c);

// Assembles (lsb, lower, mid, upper, 1) with both halves indexed by r.
BinarySequence assemble(int n, int lsb, std::uint64_t lower, int mid, std::uint64_t upper);

struct GrayStep {
    std::uint64_t codeword = 0;  // j ^ (j >> 1)
    int flipped_bit = 0;         // bit that differs between codeword(j) and codeword(j + 1)
};

// Throws std::out_of_range unless 0 <= j < 2^width - 1.
GrayStep gray_next(std::uint64_t j, int width);

// Flips bit `pos` of `seq` and updates rho in place, where rho[t-1] holds
// rho(t) for t = 1..rho.size() (any prefix of the full AACF).
void flip_update_rho(BinarySequence& seq, std::span<int> rho, int pos);

namespace kernel {

inline void flip_update_rho(std::uint64_t& bits, int n, int* rho, int len, int pos) {
    const int s = 1 - 2 * static_cast<int>((bits >> pos) & 1u);
    for (int tau = 1; tau <= len; ++tau) {
        int neighbours = 0;
        if (pos - tau >= 0) neighbours += 1 - 2 * static_cast<int>((bits >> (pos - tau)) & 1u);
        if (pos + tau < n) neighbours += 1 - 2 * static_cast<int>((bits >> (pos + tau)) & 1u);
        rho[tau - 1] -= 2 * s * neighbours;
    }
    bits ^= std::uint64_t{1} << pos;
}

// Bit i of the index moved to bit 8i.
inline constexpr auto kByteLanes = [] {
    std::array<std::uint64_t, 256> t{};
    for (int m = 0; m < 256; ++m) {
        for (int i = 0; i < 8; ++i) {
            if (m >> i & 1) t[static_cast<std::size_t>(m)] |= std::uint64_t{1} << (8 * i);
        }
    }
    return t;
}();

// Byte-lane add/subtract, modulo 256 per lane.
inline std::uint64_t lane_add(std::uint64_t x, std::uint64_t y) {
    constexpr std::uint64_t h = 0x8080808080808080ULL;
    return ((x & ~h) + (y & ~h)) ^ ((x ^ y) & h);
}
inline std::uint64_t lane_sub(std::uint64_t x, std::uint64_t y) {
    constexpr std::uint64_t h = 0x8080808080808080ULL;
    return ((x | h) - (y & ~h)) ^ ((x ^ ~y) & h);
}

inline std::uint64_t spread(std::uint64_t m, int word) { return kByteLanes[(m >> (8 * word)) & 0xFF]; }

// Same update with rho(1..len) held as signed bytes in `rho` (the RhoKey
// layout). `rev` is `bits` reversed over n positions and is kept in step.
// With x_i = 1 - 2 b_i and s = x_pos,
//   delta(tau) = -2 s (x_{pos-tau} + x_{pos+tau}) = s (4 (l + h) - 2 (vl + vh))
// where l, h are the neighbour bits and vl, vh say whether they exist.
inline void flip_update_packed(std::uint64_t& bits, std::uint64_t& rev, int n, RhoKey& rho, int len, int pos) {
    const std::uint64_t vh = low_mask(std::min(len, n - 1 - pos));
    const std::uint64_t vl = low_mask(std::min(len, pos));
    const std::uint64_t h = (bits >> (pos + 1)) & vh;
    const std::uint64_t l = (rev >> (n - pos)) & vl;
    const bool was_set = (bits >> pos) & 1u;
    for (int w = 0; w * 8 < len; ++w) {
        const std::uint64_t up = (spread(h, w) + spread(l, w)) << 2;
        const std::uint64_t down = (spread(vh, w) + spread(vl, w)) << 1;
        const std::uint64_t d = lane_sub(up, down);
        auto& word = rho.words[static_cast<std::size_t>(w)];
        word = was_set ? lane_sub(word, d) : lane_add(word, d);
    }
    bits ^= std::uint64_t{1} << pos;
    rev ^= std::uint64_t{1} << (n - 1 - pos);
}

}  // namespace kernel

struct SearchStats {
    std::uint64_t chunks = 0;
    std::uint64_t map_insertions = 0;
    std::uint64_t b_candidates = 0;
    std::uint64_t map_matches = 0;     // (a, b) found under the same key, before a >= b
    std::uint64_t verified = 0;        // full verifications performed
    std::uint64_t filtered = 0;        // rejected by the weight filter
    std::uint64_t emitted = 0;
    std::uint64_t weight_steps[3] = {0, 0, 0};  // Gray-step weight change of b: -2, 0, +2

    SearchStats& operator+=(const SearchStats& o);
};

struct Hit {
    SequencePair pair;
    std::uint64_t chunk = 0;
    int case_index = 0;
};

// One worker's search state. load() builds the map for a chunk and the
// (lsb, mid_a) half of a case; scan() runs the Gray-code pass over b.
// A loaded map serves both values of mid_b.
class ChunkSearcher {
public:
    explicit ChunkSearcher(const SearchConfig& cfg);

    void load(Chunk c, int lsb, int mid_a);
    void scan(int mid_b, std::uint64_t chunk_index, std::vector<Hit>& out);

    const SearchStats& stats() const { return stats_; }

private:
    bool accept(std::uint64_t a, std::uint64_t b) const;

    int n_;
    int k_;
    int half_;
    int max_acc_;
    RhoUpdate rho_update_;
    WeightFilter weight_filter_;
    RhoMap map_;
    Chunk chunk_{};
    int lsb_ = 0;
    int mid_a_ = 0;
    bool loaded_ = false;
    SearchStats stats_;
};

// Single chunk, single case; pairs in emission order.
std::vector<SequencePair> search_chunk(Chunk c, const SearchConfig& cfg, SearchCase which);

struct FoundPair {
    SequencePair pair;           // canonical representative
    std::uint64_t chunk = 0;     // first chunk (then case) that produced the class
    int case_index = 0;
};

struct ChunkProgress {
    std::uint64_t chunk = 0;          // the chunk just finished
    std::uint64_t done = 0;           // chunks finished so far in this run
    std::uint64_t total = 0;          // chunks in the run
    std::uint64_t resume_from = 0;    // every chunk below this index is finished
    std::size_t raw_hits = 0;         // hits so far, before equivalence filtering
};

using ProgressCallback = std::function<void(const ChunkProgress&)>;

struct SearchResult {
    std::vector<FoundPair> pairs;  // sorted by canonical pair
    SearchStats stats;
};

// Thrown when a worker cannot allocate its map. `resume_from` is the first
// chunk of the range that did not complete.
class SearchResourceError : public std::runtime_error {
public:
    SearchResourceError(std::uint64_t chunk, std::uint64_t resume_from)
        : std::runtime_error("out of memory while searching chunk " + std::to_string(chunk)),
          chunk_(chunk), resume_from_(resume_from) {}
    std::uint64_t chunk() const { return chunk_; }
    std::uint64_t resume_from() const { return resume_from_; }

private:
    std::uint64_t chunk_;
    std::uint64_t resume_from_;
};

// Runs every chunk in [chunk_lo, range_end) for every case in case_mask.
// workers == 1 takes the serial path; otherwise chunks are handed out to
// OpenMP threads one at a time. Output is identical either way.
SearchResult run_search(const SearchConfig& cfg, const ProgressCallback& progress = {});

// Serial loop over the same chunks, kept as the reference for the parallel path.
SearchResult run_search_serial(const SearchConfig& cfg, const ProgressCallback& progress = {});

}  // namespace obzcp
