#include "polysum/bitset.hpp"

#include <algorithm>
#include <bit>

#include "polysum/parallel.hpp"

namespace polysum {

RangeBitset::RangeBitset(i64 bound) : bound_(bound), words_(bound >= 0 ? static_cast<size_t>((bound >> 6) + 1) : 0, 0) {}

void RangeBitset::set_all() {
    std::fill(words_.begin(), words_.end(), ~u64{0});
    trim();
}

void RangeBitset::trim() {
    if (words_.empty()) return;
    int used = static_cast<int>((bound_ & 63) + 1);
    if (used < 64) words_.back() &= (u64{1} << used) - 1;
}

i64 RangeBitset::count() const {
    i64 c = 0;
    for (u64 w : words_) c += std::popcount(w);
    return c;
}

std::vector<i64> RangeBitset::unset_positions(i64 lo, i64 limit) const {
    std::vector<i64> out;
    if (lo < 0) lo = 0;
    for (size_t wi = static_cast<size_t>(lo >> 6); wi < words_.size(); ++wi) {
        u64 miss = ~words_[wi];
        if (wi == static_cast<size_t>(lo >> 6)) miss &= ~u64{0} << (lo & 63);
        while (miss) {
            i64 n = static_cast<i64>(wi) * 64 + std::countr_zero(miss);
            if (n > bound_) return out;
            out.push_back(n);
            if (limit >= 0 && static_cast<i64>(out.size()) >= limit) return out;
            miss &= miss - 1;
        }
    }
    return out;
}

std::vector<i64> RangeBitset::set_positions() const {
    std::vector<i64> out;
    for (size_t wi = 0; wi < words_.size(); ++wi)
        for (u64 w = words_[wi]; w; w &= w - 1) out.push_back(static_cast<i64>(wi) * 64 + std::countr_zero(w));
    return out;
}

void RangeBitset::or_with(const RangeBitset& o) {
    for (size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    trim();
}

RangeBitset bitset_from_values(const std::vector<i64>& values, i64 bound) {
    RangeBitset b(bound);
    for (i64 v : values)
        if (v >= 0 && v <= bound) b.set(v);
    return b;
}

RangeBitset shift_or_convolve(const RangeBitset& src, const std::vector<i64>& shifts, i64 bound, unsigned workers) {
    RangeBitset dst(bound);
    const auto& sw = src.words();
    auto& dw = dst.words();
    const size_t nd = dw.size();
    const i64 ns = static_cast<i64>(sw.size());
    // Small jobs are not worth a thread.
    if (static_cast<double>(nd) * static_cast<double>(shifts.size()) < 4e6) workers = 1;
    parallel_chunks(nd, workers, [&](size_t b, size_t e) {
        for (i64 s : shifts) {
            if (s < 0 || s > bound) continue;
            const i64 q = s >> 6;
            const int r = static_cast<int>(s & 63);
            i64 lo = std::max<i64>(static_cast<i64>(b), q);
            i64 hi = std::min<i64>(static_cast<i64>(e), ns + q + 1);
            if (r == 0) {
                for (i64 i = lo; i < hi; ++i)
                    if (i - q < ns) dw[i] |= sw[i - q];
            } else {
                for (i64 i = lo; i < hi; ++i) {
                    u64 w = 0;
                    if (i - q < ns) w = sw[i - q] << r;
                    if (i - q - 1 >= 0 && i - q - 1 < ns) w |= sw[i - q - 1] >> (64 - r);
                    dw[i] |= w;
                }
            }
        }
    });
    dst.trim();
    return dst;
}

RangeBitset sumset_bitset(std::vector<std::vector<i64>> sets, i64 bound, unsigned workers) {
    if (sets.empty()) {
        RangeBitset b(bound);
        if (bound >= 0) b.set(0);
        return b;
    }
    auto densest = std::max_element(sets.begin(), sets.end(), [](auto& x, auto& y) { return x.size() < y.size(); });
    std::iter_swap(sets.begin(), densest);
    RangeBitset acc = bitset_from_values(sets[0], bound);
    for (size_t i = 1; i < sets.size(); ++i) acc = shift_or_convolve(acc, sets[i], bound, workers);
    return acc;
}

}  // namespace polysum
