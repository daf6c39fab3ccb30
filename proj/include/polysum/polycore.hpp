#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

enum class Domain { Naturals, Integers };

struct Term {
    i64 coef = 1;
    int order = 3;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

struct TripleSum {
    std::vector<Term> terms;
    Domain domain = Domain::Naturals;
    friend bool operator==(const TripleSum&, const TripleSum&) = default;
};

using Witness = std::vector<i64>;

struct SquareCompletion {
    i64 stretch;
    i64 offset;
    i64 step;
    i64 residue;
};

// ((m-2)x^2 - (m-4)x) / 2, overflow checked.
i64 poly_value(int m, i64 x);

// Distinct values a*p_m(x) <= bound for x in the domain, ascending.
std::vector<i64> poly_values_upto(const Term& t, Domain d, i64 bound);

// Values in generation order 0, 1, -1, 2, -2, ... (Integers) or 0, 1, 2, ... (Naturals),
// stopping once every further argument exceeds the bound. Duplicates kept.
std::vector<std::pair<i64, i64>> poly_stream(const Term& t, Domain d, i64 bound);

// Argument x with p_m(x) = n, nonnegative when one exists.
std::optional<i64> is_generalized_polygonal(int m, i64 n, Domain d = Domain::Integers);

// stretch*p_m(x) + offset == (step*x - residue)^2
SquareCompletion square_completion(int m);

// Smallest value of a p_m stream above 1 (the first value besides 0 and 1).
i64 second_value(int m, Domain d);

void validate(const Term& t);
void validate(const TripleSum& s);

Domain parse_domain(std::string_view s);
std::string domain_name(Domain d);
// Accepts p4, p_4, 2*p_4, 2p_4 joined by '+'.
std::vector<Term> parse_terms(std::string_view s);
std::string format_term(const Term& t);
std::string format_terms(const std::vector<Term>& ts);

}  // namespace polysum
