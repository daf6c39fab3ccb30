#include "polysum/sumset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polysum/parallel.hpp"

namespace polysum {

RangeBitset range_sieve(const std::vector<Term>& terms, Domain d, i64 bound, unsigned workers) {
    if (terms.empty() || terms.size() > 4) throw PreconditionError("range_sieve takes 1 to 4 terms");
    if (bound < 0) throw PreconditionError("bound must be >= 0");
    if (bound > (i64{1} << 40)) throw OverflowError("bound beyond the supported sieve range");
    if (!workers) workers = worker_count();
    std::vector<std::vector<i64>> sets;
    for (auto& t : terms) sets.push_back(poly_values_upto(t, d, bound));
    return sumset_bitset(std::move(sets), bound, workers);
}

std::optional<Witness> member_with_witness(const TripleSum& sum, i64 n) {
    validate(sum);
    if (n < 0) return std::nullopt;
    const size_t k = sum.terms.size();
    std::vector<std::vector<std::pair<i64, i64>>> streams(k);
    for (size_t i = 0; i < k; ++i) streams[i] = poly_stream(sum.terms[i], sum.domain, n);
    // Sparsest stream outermost; the densest one is solved by inversion.
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return streams[a].size() < streams[b].size(); });
    const size_t last = idx.back();
    const Term& lt = sum.terms[last];
    Witness w(k, 0);

    auto rec = [&](auto&& self, size_t depth, i64 rest) -> bool {
        if (depth + 1 == k) {
            if (rest % lt.coef) return false;
            auto x = is_generalized_polygonal(lt.order, rest / lt.coef, sum.domain);
            if (!x) return false;
            w[last] = *x;
            return true;
        }
        size_t t = idx[depth];
        for (auto [x, v] : streams[t]) {
            if (v > rest) continue;
            w[t] = x;
            if (self(self, depth + 1, rest - v)) return true;
        }
        return false;
    };
    if (rec(rec, 0, n)) return w;
    return std::nullopt;
}

ExceptionReport::ExceptionReport(TripleSum sum, i64 bound, std::vector<i64> exceptions, std::vector<i64> offsets)
    : sum_(std::move(sum)), bound_(bound), exceptions_(std::move(exceptions)), offsets_(std::move(offsets)) {
    std::sort(exceptions_.begin(), exceptions_.end());
    std::sort(offsets_.begin(), offsets_.end());
    std::vector<char> bad(exceptions_.size(), 0);
    unsigned workers = exceptions_.size() > 64 ? worker_count() : 1;
    parallel_for_each_index(exceptions_.size(), workers, [&](size_t i) {
        i64 n = exceptions_[i];
        if (n < 0 || n > bound_) bad[i] = 1;
        for (i64 r : offsets_)
            if (n - r >= 0 && member_with_witness(sum_, n - r)) bad[i] = 1;
    });
    for (size_t i = 0; i < bad.size(); ++i)
        if (bad[i]) throw std::logic_error("exception " + std::to_string(exceptions_[i]) + " is representable");
}

std::optional<i64> ExceptionReport::max_exception() const {
    if (exceptions_.empty()) return std::nullopt;
    return exceptions_.back();
}

ExceptionReport exceptions(const TripleSum& sum, i64 bound, unsigned workers) {
    validate(sum);
    auto bits = range_sieve(sum.terms, sum.domain, bound, workers);
    return ExceptionReport(sum, bound, bits.unset_positions());
}

ExceptionReport offset_universal_check(const std::vector<Term>& terms, Domain d, const std::vector<i64>& offsets, i64 bound,
                                       unsigned workers) {
    if (offsets.empty()) throw PreconditionError("offsets must be nonempty");
    for (i64 r : offsets)
        if (r < 0) throw PreconditionError("offsets must be >= 0");
    if (!workers) workers = worker_count();
    auto base = range_sieve(terms, d, bound, workers);
    auto all = shift_or_convolve(base, offsets, bound, workers);
    return ExceptionReport(TripleSum{terms, d}, bound, all.unset_positions(), offsets);
}

}  // namespace polysum
