#pragma once

#include <optional>
#include <vector>

#include "polysum/bitset.hpp"
#include "polysum/polycore.hpp"

namespace polysum {

// Bit n set iff n = sum of a_t p_{m_t}(x_t) with every x_t in the domain. 1..4 terms.
RangeBitset range_sieve(const std::vector<Term>& terms, Domain d, i64 bound, unsigned workers = 0);

// Exhaustive search; nullopt proves n is not represented. Witness follows the term order of `sum`.
std::optional<Witness> member_with_witness(const TripleSum& sum, i64 n);

class ExceptionReport {
public:
    // Re-verifies every listed exception by exhaustive search; throws std::logic_error on disagreement.
    ExceptionReport(TripleSum sum, i64 bound, std::vector<i64> exceptions, std::vector<i64> offsets = {0});

    const TripleSum& sum() const { return sum_; }
    i64 bound() const { return bound_; }
    const std::vector<i64>& exceptions() const { return exceptions_; }
    const std::vector<i64>& offsets() const { return offsets_; }
    std::optional<i64> max_exception() const;

private:
    TripleSum sum_;
    i64 bound_;
    std::vector<i64> exceptions_;
    std::vector<i64> offsets_;
};

ExceptionReport exceptions(const TripleSum& sum, i64 bound, unsigned workers = 0);

// n <= bound outside the union over r of (sumset + r).
ExceptionReport offset_universal_check(const std::vector<Term>& terms, Domain d, const std::vector<i64>& offsets, i64 bound,
                                       unsigned workers = 0);

}  // namespace polysum
