// rho_map.hpp
//
// Map from a truncated AACF vector to every packed sequence producing it.
// The key stores rho(1..k) as signed bytes, eight to a word; |rho| <= 62 so
// the encoding is exact. The table is a flat bucket array with chained
// entries, sized once per worker and cleared between chunks.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace obzcp {

inline constexpr int kMaxKeyLength = 32;

struct RhoKey {
    std::array<std::uint64_t, kMaxKeyLength / 8> words{};

    static RhoKey pack(std::span<const int> values);
    // Key of the element-wise negation of `values`.
    static RhoKey pack_negated(std::span<const int> values);

    void set(int index, int value) {
        const auto byte = static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(value)));
        words[static_cast<std::size_t>(index / 8)] |= byte << (8 * (index % 8));
    }

    std::uint64_t hash() const {
        std::uint64_t h = words[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (words[1] + (h >> 29)) * 0xBF58476D1CE4E5B9ULL;
        h ^= (words[2] + (h >> 31)) * 0x94D049BB133111EBULL;
        h ^= (words[3] + (h >> 27)) * 0x9E3779B97F4A7C15ULL;
        return h ^ (h >> 32);
    }

    friend bool operator==(const RhoKey&, const RhoKey&) = default;
};

class RhoMap {
public:
    // Room for `capacity` entries; throws std::bad_alloc if that is too much.
    explicit RhoMap(std::size_t capacity);

    void clear();
    void insert(const RhoKey& key, std::uint64_t value);

    template <class F>
    void for_each_match(const RhoKey& key, F&& f) const {
        std::uint32_t i = heads_[bucket(key)];
        while (i != kEnd) {
            if (keys_[i] == key) f(values_[i]);
            i = next_[i];
        }
    }

    std::vector<std::uint64_t> lookup(const RhoKey& key) const;

    std::size_t size() const { return keys_.size(); }
    std::size_t capacity() const { return capacity_; }

private:
    static constexpr std::uint32_t kEnd = 0xFFFFFFFFu;

    std::size_t bucket(const RhoKey& key) const { return key.hash() & bucket_mask_; }

    std::size_t capacity_;
    std::size_t bucket_mask_;
    std::vector<std::uint32_t> heads_;
    std::vector<RhoKey> keys_;
    std::vector<std::uint64_t> values_;
    std::vector<std::uint32_t> next_;
};

}  // namespace obzcp
