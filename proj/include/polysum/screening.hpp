#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "polysum/polycore.hpp"

namespace polysum {

constexpr i64 kUnbounded = std::numeric_limits<i64>::max();

struct Range {
    i64 lo = 1;
    i64 hi = kUnbounded;
    bool singleton() const { return lo == hi; }
    bool bounded() const { return hi != kUnbounded; }
    bool contains(i64 v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Range&, const Range&) = default;
};

// Terms in slot order (a p_i, b p_j, c p_k).
using Triple = std::array<Term, 3>;

// Lexicographic on (i, j, k, a, b, c).
bool triple_less(const Triple& x, const Triple& y);
std::string format_triple(const Triple& t);
Triple triple_of(const TripleSum& s);

struct Box {
    std::array<Range, 3> coef;
    std::array<Range, 3> order;
    bool concrete() const;
    bool bounded() const;
    bool contains(const Triple& t) const;
    Triple triple() const;  // requires concrete()
    friend bool operator==(const Box&, const Box&) = default;
};

std::string format_box(const Box& b);

enum class CoefRule { None, Ascending, AscendingWhenOrdersEqual };

struct CandidateSpace {
    std::string name;
    Domain domain = Domain::Naturals;
    Box initial;
    bool order_chain = false;        // i <= j <= k
    bool same_order = false;         // i = j = k
    CoefRule coef_rule = CoefRule::None;
    int min_max_order = 0;           // max(i,j,k) >= this
    bool some_coef_above_one = false;
    std::vector<int> excluded_orders;
    std::vector<int> required_orders;  // every listed order occurs and no other does

    bool contains(const Triple& t) const;
    // Tightens the box to the constraints; false when nothing remains.
    bool propagate(Box& b) const;
};

enum class CertKind { Direct, OrderTail, CoefficientTail };
std::string cert_kind_name(CertKind k);

struct EliminationCertificate {
    Box target;
    CertKind kind = CertKind::Direct;
    std::vector<i64> witnesses;  // none of these is represented by any triple in the target
};

struct Survivor {
    Triple triple;
    std::vector<i64> exceptions;  // at most `allowed` entries, each <= bound
};

struct ScreenStats {
    i64 boxes = 0;
    i64 pruned = 0;
    i64 concrete_scanned = 0;
    i64 max_coef = 0;   // largest concrete coefficient examined
    i64 max_order = 0;  // largest concrete order examined
};

struct ScreenReport {
    std::string space;
    i64 bound = 0;
    i64 search_bound = 0;
    int allowed = 0;
    std::vector<Survivor> survivors;
    std::vector<EliminationCertificate> eliminations;
    ScreenStats stats;
};

struct SpaceNotClosable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Survivors have no exception <= bound.
ScreenReport screen(const CandidateSpace& space, i64 bound, i64 search_bound = 2000, unsigned workers = 0);

// Concrete triples with exactly one exception <= bound.
std::vector<std::pair<Triple, i64>> unique_exception_scan(const CandidateSpace& space, i64 bound, i64 search_bound = 2000,
                                                          unsigned workers = 0);

// Shared engine: survivors have at most `allowed` exceptions <= bound.
ScreenReport screen_allowing(const CandidateSpace& space, i64 bound, i64 search_bound, int allowed, unsigned workers);

// Every value <= n of c*p_k(x) with c, k in the ranges, enumerated argument-first.
std::vector<i64> slot_values(const Range& coef, const Range& order, Domain d, i64 n);

// Checks the certificate from scratch by enumerating every term value <= each witness.
bool validate_certificate(const EliminationCertificate& c, Domain d);

struct TailCut {
    i64 witness;
    i64 cutoff;
};

// Smallest n <= search_bound outside pair + {0, c}; every order above n/c + 3 only adds {0, c} up to n.
std::optional<TailCut> order_tail_cutoff(const std::array<Term, 2>& fixed, i64 c, Domain d, i64 search_bound);

// Smallest n <= search_bound outside the pair sumset; every coefficient above n only adds 0 up to n.
std::optional<TailCut> coefficient_tail_cutoff(const std::array<Term, 2>& fixed, Domain d, i64 search_bound);

struct CatalogDiffTriples {
    std::vector<Triple> missing;  // in catalog, not surviving
    std::vector<Triple> extra;    // surviving, not in catalog
    bool empty() const { return missing.empty() && extra.empty(); }
};

CatalogDiffTriples compare_with_catalog(const std::vector<Triple>& survivors, const std::vector<Triple>& catalog);

std::vector<std::string> preset_names();
CandidateSpace preset_space(const std::string& name);
i64 preset_bound(const std::string& name);
// Allowed exceptions for the preset (1 for unique-29, else 0).
int preset_allowed(const std::string& name);

}  // namespace polysum
