#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polysum/bitset.hpp"

namespace polysum {

class PrimeSieve {
public:
    explicit PrimeSieve(i64 bound);
    i64 bound() const { return bits_.bound(); }
    bool is_prime(i64 n) const { return bits_.test(n); }
    i64 count() const { return bits_.count(); }
    const RangeBitset& bits() const { return bits_; }

private:
    RangeBitset bits_;
};

PrimeSieve sieve_primes(i64 bound);

enum class Shape { Square, Polygonal };
enum class Universe { All, Odd, Coprime };

struct ResidueFilter {
    i64 modulus = 1;
    i64 residue = 0;
};

// n = p + a*x^2 (x in Z) or n = p + a*p_m(x) (x in N), p prime passing the filter.
struct PrimePolyQuery {
    i64 a = 1;
    Shape shape = Shape::Square;
    int m = 4;
    Universe universe = Universe::Coprime;
    std::optional<ResidueFilter> filter;
};

std::vector<i64> prime_term_values(const PrimePolyQuery& q, i64 bound);
bool in_universe(const PrimePolyQuery& q, i64 n);

std::vector<i64> exception_scan(const PrimePolyQuery& q, i64 bound, unsigned workers = 0);
std::optional<i64> max_exception(const PrimePolyQuery& q, i64 bound, unsigned workers = 0);

// Some (p, x) with n = p + term(x), by direct search.
std::optional<std::pair<i64, i64>> prime_decomposition(const PrimePolyQuery& q, const PrimeSieve& primes, i64 n);

}  // namespace polysum
