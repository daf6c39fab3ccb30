#include "polysum/primepoly.hpp"

#include <algorithm>
#include <numeric>

#include "polysum/parallel.hpp"
#include "polysum/polycore.hpp"

namespace polysum {

PrimeSieve::PrimeSieve(i64 bound) : bits_(bound) {
    if (bound < 2) throw PreconditionError("prime sieve bound must be >= 2");
    const i64 root = static_cast<i64>(isqrt(static_cast<u64>(bound)));
    std::vector<char> small(static_cast<size_t>(root) + 1, 1);
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (i64 j = i * i; j <= root; j += i) small[j] = 0;
    }
    constexpr i64 seg = i64{1} << 18;
    std::vector<char> mark(seg);
    for (i64 lo = 0; lo <= bound; lo += seg) {
        const i64 hi = std::min(bound, lo + seg - 1);
        std::fill(mark.begin(), mark.end(), 1);
        for (i64 p : base) {
            if (p * p > hi) break;
            i64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (i64 j = start; j <= hi; j += p) mark[j - lo] = 0;
        }
        for (i64 n = std::max<i64>(lo, 2); n <= hi; ++n)
            if (mark[n - lo]) bits_.set(n);
    }
}

PrimeSieve sieve_primes(i64 bound) { return PrimeSieve(bound); }

std::vector<i64> prime_term_values(const PrimePolyQuery& q, i64 bound) {
    if (q.a < 1) throw PreconditionError("coefficient must be >= 1");
    if (q.shape == Shape::Square) return poly_values_upto(Term{q.a, 4}, Domain::Naturals, bound);
    return poly_values_upto(Term{q.a, q.m}, Domain::Naturals, bound);
}

bool in_universe(const PrimePolyQuery& q, i64 n) {
    if (n < 2) return false;
    switch (q.universe) {
        case Universe::All: return true;
        case Universe::Odd: return n % 2 == 1;
        case Universe::Coprime: return std::gcd(q.a, n) == 1;
    }
    return false;
}

static RangeBitset filtered_primes(const PrimePolyQuery& q, i64 bound) {
    auto sieve = sieve_primes(std::max<i64>(bound, 2));
    RangeBitset bits = sieve.bits();
    if (q.filter) {
        if (q.filter->modulus < 1 || q.filter->residue < 0 || q.filter->residue >= q.filter->modulus)
            throw PreconditionError("residue filter needs 0 <= r < q");
        for (i64 p : sieve.bits().set_positions())
            if (p % q.filter->modulus != q.filter->residue) bits.reset(p);
    }
    return bits;
}

std::vector<i64> exception_scan(const PrimePolyQuery& q, i64 bound, unsigned workers) {
    if (bound < 2) throw PreconditionError("bound must be >= 2");
    if (!workers) workers = worker_count();
    auto primes = filtered_primes(q, bound);
    auto hit = shift_or_convolve(primes, prime_term_values(q, bound), bound, workers);
    std::vector<i64> out;
    for (i64 n : hit.unset_positions(2))
        if (in_universe(q, n)) out.push_back(n);
    return out;
}

std::optional<i64> max_exception(const PrimePolyQuery& q, i64 bound, unsigned workers) {
    auto e = exception_scan(q, bound, workers);
    if (e.empty()) return std::nullopt;
    return e.back();
}

std::optional<std::pair<i64, i64>> prime_decomposition(const PrimePolyQuery& q, const PrimeSieve& primes, i64 n) {
    auto stream = poly_stream(Term{q.a, q.shape == Shape::Square ? 4 : q.m}, Domain::Naturals, n);
    for (auto [x, v] : stream) {
        i64 p = n - v;
        if (p < 2 || p > primes.bound() || !primes.is_prime(p)) continue;
        if (q.filter && p % q.filter->modulus != q.filter->residue) continue;
        return std::pair{p, x};
    }
    return std::nullopt;
}

}  // namespace polysum
