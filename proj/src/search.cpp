#include "obzcp/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "obzcp/equivalence.hpp"

namespace obzcp {

namespace {

inline std::uint64_t assemble_bits(int n, int lsb, std::uint64_t lower, int mid, std::uint64_t upper) {
    const int k = (n - 3) / 2;
    const int half = (n - 1) / 2;
    return static_cast<std::uint64_t>(lsb) | (lower << 1) | (static_cast<std::uint64_t>(mid) << half) |
           (kernel::reverse_bits(upper, k) << (half + 1)) | (std::uint64_t{1} << (n - 1));
}

// Cases grouped by the (lsb, mid_a) half that determines the map.
template <class Load, class Scan>
void for_each_case_group(std::uint8_t mask, Load&& load, Scan&& scan) {
    for (int group = 0; group < 4; ++group) {
        const int lsb = group >> 1;
        const int mid_a = group & 1;
        const int base = lsb << 2 | mid_a << 1;
        if ((mask & (0b11 << base)) == 0) continue;
        load(lsb, mid_a);
        for (int mid_b = 0; mid_b < 2; ++mid_b) {
            if (mask & (1 << (base | mid_b))) scan(mid_b);
        }
    }
}

std::vector<FoundPair> merge_hits(const std::vector<Hit>& hits) {
    std::map<SequencePair, FoundPair> classes;
    for (const auto& h : hits) {
        const SequencePair canon = canonical(h.pair);
        auto [it, inserted] = classes.try_emplace(canon, FoundPair{canon, h.chunk, h.case_index});
        if (!inserted) {
            auto& f = it->second;
            if (std::pair(h.chunk, h.case_index) < std::pair(f.chunk, f.case_index)) {
                f.chunk = h.chunk;
                f.case_index = h.case_index;
            }
        }
    }
    std::vector<FoundPair> out;
    out.reserve(classes.size());
    for (auto& [key, found] : classes) out.push_back(found);
    return out;
}

// Tracks which chunks of [lo, hi) are finished and the resume point.
class CompletionTracker {
public:
    CompletionTracker(std::uint64_t lo, std::uint64_t hi) : lo_(lo), done_(hi - lo, false), next_(lo) {}

    ChunkProgress finish(std::uint64_t chunk, std::size_t raw_hits) {
        done_[chunk - lo_] = true;
        ++count_;
        while (next_ - lo_ < done_.size() && done_[next_ - lo_]) ++next_;
        return ChunkProgress{chunk, count_, done_.size(), next_, raw_hits};
    }
    std::uint64_t resume_from() const { return next_; }

private:
    std::uint64_t lo_;
    std::vector<bool> done_;
    std::uint64_t next_;
    std::uint64_t count_ = 0;
};

void process_chunk(ChunkSearcher& searcher, const SearchConfig& cfg, std::uint64_t index,
                   std::vector<Hit>& out) {
    const Chunk c{cfg.half_width(), index};
    for_each_case_group(
        cfg.case_mask, [&](int lsb, int mid_a) { searcher.load(c, lsb, mid_a); },
        [&](int mid_b) { searcher.scan(mid_b, index, out); });
}

}  // namespace

SearchCase SearchCase::from_index(int index) {
    if (index < 0 || index >= 8) throw std::out_of_range("case index outside [0, 8)");
    return SearchCase{index >> 2 & 1, index >> 1 & 1, index & 1};
}

void SearchConfig::validate() const {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("search length must be odd and >= 5");
    if (n > kMaxLength) throw std::invalid_argument("search length exceeds " + std::to_string(kMaxLength));
    if (max_acc < 2 || max_acc % 2 != 0) throw std::invalid_argument("max-acc must be even and >= 2");
    if (case_mask == 0) throw std::invalid_argument("no search cases selected");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    const std::uint64_t end = range_end();
    if (chunk_lo >= end || end > chunk_count()) {
        throw std::invalid_argument("chunk range [" + std::to_string(chunk_lo) + ", " + std::to_string(end) +
                                    ") is empty or outside [0, " + std::to_string(chunk_count()) + ")");
    }
}

Chunk chunk_of(const BinarySequence& a) {
    const int n = a.length();
    const int k = (n - 3) / 2;
    const int half = (n - 1) / 2;
    const std::uint64_t lower = (a.bits() >> 1) & low_mask(k);
    const std::uint64_t upper = kernel::reverse_bits((a.bits() >> (half + 1)) & low_mask(k), k);
    return Chunk{k, lower ^ upper};
}

BinarySequence build_a(std::uint64_t g, Chunk c, int lsb, int mid) {
    const int n = 2 * c.width + 3;
    return assemble(n, lsb, g, mid, (g ^ c.bits) & low_mask(c.width));
}

std::uint64_t derive_b_upper(std::uint64_t b_lower, Chunk c) {
    return ~(c.bits ^ b_lower) & low_mask(c.width);
}

BinarySequence assemble(int n, int lsb, std::uint64_t lower, int mid, std::uint64_t upper) {
    const int k = (n - 3) / 2;
    if ((lower | upper) & ~low_mask(k)) throw std::invalid_argument("half-sequence wider than (n-3)/2 bits");
    return BinarySequence(n, assemble_bits(n, lsb & 1, lower, mid & 1, upper));
}

GrayStep gray_next(std::uint64_t j, int width) {
    if (width < 1 || width > 63 || j + 1 >= (std::uint64_t{1} << width)) {
        throw std::out_of_range("Gray counter past the last codeword");
    }
    return GrayStep{j ^ (j >> 1), std::countr_zero(j + 1)};
}

void flip_update_rho(BinarySequence& seq, std::span<int> rho, int pos) {
    const int n = seq.length();
    if (pos < 0 || pos >= n) throw std::out_of_range("flip position outside the sequence");
    if (rho.size() >= static_cast<std::size_t>(n)) throw std::invalid_argument("rho longer than n - 1 lags");
    std::uint64_t bits = seq.bits();
    kernel::flip_update_rho(bits, n, rho.data(), static_cast<int>(rho.size()), pos);
    seq = BinarySequence(n, bits);
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    chunks += o.chunks;
    map_insertions += o.map_insertions;
    b_candidates += o.b_candidates;
    map_matches += o.map_matches;
    verified += o.verified;
    filtered += o.filtered;
    emitted += o.emitted;
    for (int i = 0; i < 3; ++i) weight_steps[i] += o.weight_steps[i];
    return *this;
}

ChunkSearcher::ChunkSearcher(const SearchConfig& cfg)
    : n_(cfg.n),
      k_(cfg.half_width()),
      half_((cfg.n - 1) / 2),
      max_acc_(cfg.max_acc),
      rho_update_(cfg.rho_update),
      weight_filter_(cfg.weight_filter),
      map_(std::size_t{1} << cfg.half_width()) {}

void ChunkSearcher::load(Chunk c, int lsb, int mid_a) {
    map_.clear();
    chunk_ = c;
    lsb_ = lsb;
    mid_a_ = mid_a;
    const std::uint64_t count = std::uint64_t{1} << k_;
    for (std::uint64_t g = 0; g < count; ++g) {
        const std::uint64_t a = assemble_bits(n_, lsb, g, mid_a, g ^ c.bits);
        // Stored under -rho_a so that a scan can look up rho_b as is.
        RhoKey key;
        for (int tau = 1; tau <= k_; ++tau) key.set(tau - 1, -kernel::aacf(a, n_, tau));
        map_.insert(key, a);
    }
    stats_.map_insertions += count;
    loaded_ = true;
}

bool ChunkSearcher::accept(std::uint64_t a, std::uint64_t b) const {
    for (int tau = 1; tau <= half_; ++tau) {
        if (kernel::aacf(a, n_, tau) + kernel::aacf(b, n_, tau) != 0) return false;
    }
    for (int tau = half_ + 1; tau < n_; ++tau) {
        const int s = kernel::aacf(a, n_, tau) + kernel::aacf(b, n_, tau);
        if (s > max_acc_ || s < -max_acc_) return false;
    }
    return true;
}

void ChunkSearcher::scan(int mid_b, std::uint64_t chunk_index, std::vector<Hit>& out) {
    if (!loaded_) throw std::logic_error("ChunkSearcher::scan before load");
    const int case_index = lsb_ << 2 | mid_a_ << 1 | mid_b;
    const std::uint64_t steps = std::uint64_t{1} << k_;

    std::uint64_t b = assemble_bits(n_, lsb_, 0, mid_b, derive_b_upper(0, chunk_));
    std::uint64_t rev = kernel::reverse_bits(b, n_);
    RhoKey rho;
    for (int tau = 1; tau <= k_; ++tau) rho.set(tau - 1, kernel::aacf(b, n_, tau));
    int weight_b = std::popcount(b);

    for (std::uint64_t j = 0;; ++j) {
        map_.for_each_match(rho, [&](std::uint64_t a) {
            ++stats_.map_matches;
            if (a < b) return;
            if (weight_filter_ && !weight_filter_(std::popcount(a), weight_b)) {
                ++stats_.filtered;
                return;
            }
            ++stats_.verified;
            if (accept(a, b)) {
                ++stats_.emitted;
                out.push_back(Hit{SequencePair(BinarySequence(n_, a), BinarySequence(n_, b)), chunk_index, case_index});
            }
        });
        if (j + 1 == steps) break;

        // Lower bit r of the Gray code is position r + 1; its mirror is n - 2 - r.
        const int r = std::countr_zero(j + 1);
        const int lower_pos = r + 1;
        const int upper_pos = n_ - 2 - r;
        const int before = weight_b;
        weight_b += ((b >> lower_pos) & 1u) ? -1 : 1;
        weight_b += ((b >> upper_pos) & 1u) ? -1 : 1;
        if (rho_update_ == RhoUpdate::Incremental) {
            kernel::flip_update_packed(b, rev, n_, rho, k_, lower_pos);
            kernel::flip_update_packed(b, rev, n_, rho, k_, upper_pos);
        } else {
            b ^= (std::uint64_t{1} << lower_pos) | (std::uint64_t{1} << upper_pos);
            rho = RhoKey{};
            for (int tau = 1; tau <= k_; ++tau) rho.set(tau - 1, kernel::aacf(b, n_, tau));
        }
        ++stats_.weight_steps[(weight_b - before) / 2 + 1];
    }
    stats_.b_candidates += steps;
}

std::vector<SequencePair> search_chunk(Chunk c, const SearchConfig& cfg, SearchCase which) {
    cfg.validate();
    if (c.width != cfg.half_width() || c.bits >= cfg.chunk_count()) {
        throw std::invalid_argument("chunk does not match the configured length");
    }
    ChunkSearcher searcher(cfg);
    searcher.load(c, which.lsb, which.mid_a);
    std::vector<Hit> hits;
    searcher.scan(which.mid_b, c.bits, hits);
    std::vector<SequencePair> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(h.pair);
    return out;
}

SearchResult run_search_serial(const SearchConfig& cfg, const ProgressCallback& progress) {
    cfg.validate();
    const std::uint64_t lo = cfg.chunk_lo;
    const std::uint64_t hi = cfg.range_end();
    CompletionTracker tracker(lo, hi);
    std::vector<Hit> hits;
    std::optional<ChunkSearcher> searcher;
    try {
        searcher.emplace(cfg);
    } catch (const std::bad_alloc&) {
        throw SearchResourceError(lo, lo);
    }
    for (std::uint64_t i = lo; i < hi; ++i) {
        try {
            process_chunk(*searcher, cfg, i, hits);
        } catch (const std::bad_alloc&) {
            throw SearchResourceError(i, tracker.resume_from());
        }
        const auto p = tracker.finish(i, hits.size());
        if (progress) progress(p);
    }
    SearchResult result;
    result.stats = searcher->stats();
    result.stats.chunks = hi - lo;
    result.pairs = merge_hits(hits);
    return result;
}

SearchResult run_search(const SearchConfig& cfg, const ProgressCallback& progress) {
#ifndef _OPENMP
    return run_search_serial(cfg, progress);
#else
    if (cfg.workers <= 1) return run_search_serial(cfg, progress);
    cfg.validate();

    const auto lo = static_cast<std::int64_t>(cfg.chunk_lo);
    const auto hi = static_cast<std::int64_t>(cfg.range_end());
    CompletionTracker tracker(cfg.chunk_lo, cfg.range_end());
    std::vector<Hit> hits;
    SearchStats stats;
    std::atomic<bool> failed{false};
    std::uint64_t failed_chunk = cfg.range_end();

#pragma omp parallel num_threads(cfg.workers)
    {
        std::optional<ChunkSearcher> searcher;
        try {
            searcher.emplace(cfg);
        } catch (const std::bad_alloc&) {
#pragma omp critical(obzcp_failure)
            failed_chunk = std::min<std::uint64_t>(failed_chunk, cfg.chunk_lo);
            failed = true;
        }
        std::vector<Hit> local;

#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = lo; i < hi; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            const auto index = static_cast<std::uint64_t>(i);
            try {
                process_chunk(*searcher, cfg, index, local);
            } catch (const std::bad_alloc&) {
#pragma omp critical(obzcp_failure)
                failed_chunk = std::min(failed_chunk, index);
                failed = true;
                continue;
            }
#pragma omp critical(obzcp_progress)
            {
                const auto p = tracker.finish(index, hits.size() + local.size());
                if (progress) progress(p);
            }
        }

#pragma omp critical(obzcp_merge)
        {
            hits.insert(hits.end(), local.begin(), local.end());
            if (searcher) stats += searcher->stats();
        }
    }

    if (failed) throw SearchResourceError(failed_chunk, tracker.resume_from());
    SearchResult result;
    result.stats = stats;
    result.stats.chunks = cfg.range_end() - cfg.chunk_lo;
    result.pairs = merge_hits(hits);
    return result;
#endif
}

}  // namespace obzcp
