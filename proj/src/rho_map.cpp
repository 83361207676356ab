#include "obzcp/rho_map.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace obzcp {

RhoKey RhoKey::pack(std::span<const int> values) {
    if (values.size() > kMaxKeyLength) throw std::invalid_argument("rho key too long");
    RhoKey key;
    for (std::size_t i = 0; i < values.size(); ++i) key.set(static_cast<int>(i), values[i]);
    return key;
}

RhoKey RhoKey::pack_negated(std::span<const int> values) {
    if (values.size() > kMaxKeyLength) throw std::invalid_argument("rho key too long");
    RhoKey key;
    for (std::size_t i = 0; i < values.size(); ++i) key.set(static_cast<int>(i), -values[i]);
    return key;
}

RhoMap::RhoMap(std::size_t capacity) : capacity_(capacity) {
    if (capacity >= kEnd) throw std::bad_alloc();
    const std::size_t buckets = std::bit_ceil(std::max<std::size_t>(2 * capacity, 16));
    bucket_mask_ = buckets - 1;
    heads_.assign(buckets, kEnd);
    keys_.reserve(capacity);
    values_.reserve(capacity);
    next_.reserve(capacity);
}

void RhoMap::clear() {
    std::fill(heads_.begin(), heads_.end(), kEnd);
    keys_.clear();
    values_.clear();
    next_.clear();
}

void RhoMap::insert(const RhoKey& key, std::uint64_t value) {
    const auto index = static_cast<std::uint32_t>(keys_.size());
    auto& head = heads_[bucket(key)];
    keys_.push_back(key);
    values_.push_back(value);
    next_.push_back(head);
    head = index;
}

std::vector<std::uint64_t> RhoMap::lookup(const RhoKey& key) const {
    std::vector<std::uint64_t> out;
    for_each_match(key, [&](std::uint64_t v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace obzcp
