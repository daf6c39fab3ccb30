#pragma once

#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

// Membership bitmap over [0, bound].
class RangeBitset {
public:
    RangeBitset() = default;
    explicit RangeBitset(i64 bound);

    i64 bound() const { return bound_; }
    bool test(i64 n) const { return n >= 0 && n <= bound_ && (words_[n >> 6] >> (n & 63)) & 1; }
    void set(i64 n) { words_[n >> 6] |= u64{1} << (n & 63); }
    void reset(i64 n) { words_[n >> 6] &= ~(u64{1} << (n & 63)); }
    void set_all();
    i64 count() const;
    // Unset positions in [lo, bound], ascending, stopping after `limit` entries when limit >= 0.
    std::vector<i64> unset_positions(i64 lo = 0, i64 limit = -1) const;
    std::vector<i64> set_positions() const;
    void or_with(const RangeBitset& o);

    const std::vector<u64>& words() const { return words_; }
    std::vector<u64>& words() { return words_; }
    void trim();

    friend bool operator==(const RangeBitset&, const RangeBitset&) = default;

private:
    i64 bound_ = -1;
    std::vector<u64> words_;
};

RangeBitset bitset_from_values(const std::vector<i64>& values, i64 bound);

// dst = OR over s in shifts of (src << s), truncated to `bound`. Output words are split across workers.
RangeBitset shift_or_convolve(const RangeBitset& src, const std::vector<i64>& shifts, i64 bound, unsigned workers);

// Sumset of value sets truncated to bound: starts from the densest set, convolves the rest.
RangeBitset sumset_bitset(std::vector<std::vector<i64>> sets, i64 bound, unsigned workers);

}  // namespace polysum
