#include "polysum/screening.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "polysum/bitset.hpp"
#include "polysum/parallel.hpp"
#include "polysum/sumset.hpp"

namespace polysum {

namespace {

std::array<i64, 6> sort_key(const Triple& t) {
    return {t[0].order, t[1].order, t[2].order, t[0].coef, t[1].coef, t[2].coef};
}

std::string fmt_range(const Range& r) {
    if (r.singleton()) return std::to_string(r.lo);
    return std::to_string(r.lo) + ".." + (r.bounded() ? std::to_string(r.hi) : std::string("inf"));
}

bool tighten(Range& r, i64 lo, i64 hi) {
    bool changed = false;
    if (lo > r.lo) r.lo = lo, changed = true;
    if (hi < r.hi) r.hi = hi, changed = true;
    return changed;
}

// x <= y on ranges: y.lo >= x.lo and x.hi <= y.hi.
bool chain(Range& x, Range& y) {
    bool c = tighten(y, x.lo, kUnbounded);
    c |= tighten(x, 1, y.hi);
    return c;
}

bool empty(const Range& r) { return r.lo > r.hi; }

}  // namespace

bool triple_less(const Triple& x, const Triple& y) { return sort_key(x) < sort_key(y); }

std::string format_triple(const Triple& t) { return format_terms({t[0], t[1], t[2]}); }

Triple triple_of(const TripleSum& s) {
    if (s.terms.size() != 3) throw PreconditionError("expected three terms");
    return {s.terms[0], s.terms[1], s.terms[2]};
}

bool Box::concrete() const {
    for (int s = 0; s < 3; ++s)
        if (!coef[s].singleton() || !order[s].singleton()) return false;
    return true;
}

bool Box::bounded() const {
    for (int s = 0; s < 3; ++s)
        if (!coef[s].bounded() || !order[s].bounded()) return false;
    return true;
}

bool Box::contains(const Triple& t) const {
    for (int s = 0; s < 3; ++s)
        if (!coef[s].contains(t[s].coef) || !order[s].contains(t[s].order)) return false;
    return true;
}

Triple Box::triple() const {
    Triple t;
    for (int s = 0; s < 3; ++s) t[s] = Term{coef[s].lo, static_cast<int>(order[s].lo)};
    return t;
}

std::string format_box(const Box& b) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (i) s += '+';
        if (!(b.coef[i].singleton() && b.coef[i].lo == 1)) s += fmt_range(b.coef[i]) + "*";
        s += "p_" + fmt_range(b.order[i]);
    }
    return s;
}

bool CandidateSpace::contains(const Triple& t) const {
    for (int s = 0; s < 3; ++s)
        if (!initial.coef[s].contains(t[s].coef) || !initial.order[s].contains(t[s].order)) return false;
    const i64 i = t[0].order, j = t[1].order, k = t[2].order;
    const i64 a = t[0].coef, b = t[1].coef, c = t[2].coef;
    if (order_chain && !(i <= j && j <= k)) return false;
    if (same_order && !(i == j && j == k)) return false;
    if (coef_rule == CoefRule::Ascending && !(a <= b && b <= c)) return false;
    if (coef_rule == CoefRule::AscendingWhenOrdersEqual && ((i == j && a > b) || (j == k && b > c))) return false;
    if (min_max_order && std::max({i, j, k}) < min_max_order) return false;
    if (some_coef_above_one && std::max({a, b, c}) <= 1) return false;
    for (int e : excluded_orders)
        if (i == e || j == e || k == e) return false;
    if (!required_orders.empty()) {
        std::set<i64> have{i, j, k};
        std::set<i64> need(required_orders.begin(), required_orders.end());
        if (have != need) return false;
    }
    return true;
}

bool CandidateSpace::propagate(Box& b) const {
    for (int s = 0; s < 3; ++s) {
        tighten(b.coef[s], initial.coef[s].lo, initial.coef[s].hi);
        tighten(b.order[s], initial.order[s].lo, initial.order[s].hi);
    }
    bool changed = true;
    for (int rounds = 0; changed && rounds < 64; ++rounds) {
        changed = false;
        for (int s = 0; s < 3; ++s) {
            for (int e : excluded_orders) {
                if (b.order[s].lo == e) b.order[s].lo++, changed = true;
                if (b.order[s].hi == e) b.order[s].hi--, changed = true;
            }
            if (empty(b.order[s]) || empty(b.coef[s])) return false;
        }
        if (order_chain) {
            changed |= chain(b.order[0], b.order[1]);
            changed |= chain(b.order[1], b.order[2]);
        }
        if (same_order) {
            for (int s = 1; s < 3; ++s) {
                changed |= chain(b.order[0], b.order[s]);
                changed |= chain(b.order[s], b.order[0]);
            }
        }
        if (coef_rule == CoefRule::Ascending) {
            changed |= chain(b.coef[0], b.coef[1]);
            changed |= chain(b.coef[1], b.coef[2]);
        } else if (coef_rule == CoefRule::AscendingWhenOrdersEqual) {
            for (int s = 0; s < 2; ++s)
                if (b.order[s].singleton() && b.order[s] == b.order[s + 1]) changed |= chain(b.coef[s], b.coef[s + 1]);
        }
        if (min_max_order) {
            int can = 0, last = -1;
            for (int s = 0; s < 3; ++s)
                if (b.order[s].hi >= min_max_order) ++can, last = s;
            if (can == 0) return false;
            if (can == 1) changed |= tighten(b.order[last], min_max_order, kUnbounded);
        }
        if (some_coef_above_one) {
            int can = 0, last = -1;
            for (int s = 0; s < 3; ++s)
                if (b.coef[s].hi > 1) ++can, last = s;
            if (can == 0) return false;
            if (can == 1) changed |= tighten(b.coef[last], 2, kUnbounded);
        }
        for (int r : required_orders) {
            bool possible = false;
            for (int s = 0; s < 3; ++s) possible |= b.order[s].contains(r);
            if (!possible) return false;
        }
        for (int s = 0; s < 3; ++s)
            if (empty(b.order[s]) || empty(b.coef[s])) return false;
    }
    return true;
}

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::Direct: return "direct";
        case CertKind::OrderTail: return "order-tail";
        case CertKind::CoefficientTail: return "coefficient-tail";
    }
    return "?";
}

namespace {

// Every value <= n of c*p_k(x) over the slot's ranges, as a bitmap. Orders k >= 5 with c*v2(k) > n
// only contribute 0 and c, and v2 grows with k from 5 on, so the loop stops there.
RangeBitset slot_union(const Range& coef, const Range& order, Domain d, i64 n) {
    RangeBitset u(n);
    u.set(0);
    const i64 chi = std::min(coef.hi, n);
    for (i64 c = coef.lo; c <= chi; ++c) {
        u.set(c);
        for (i64 k = order.lo; k <= order.hi; ++k) {
            if (k >= 5 && static_cast<i128>(c) * second_value(static_cast<int>(k), d) > n) break;
            for (auto [x, v] : poly_stream(Term{c, static_cast<int>(k)}, d, n)) u.set(v);
        }
    }
    return u;
}

std::vector<i64> box_misses(const Box& b, Domain d, i64 n, int limit) {
    std::vector<std::vector<i64>> sets;
    for (int s = 0; s < 3; ++s) sets.push_back(slot_union(b.coef[s], b.order[s], d, n).set_positions());
    return sumset_bitset(std::move(sets), n, 1).unset_positions(0, limit);
}

i64 uncertainty(const Box& b, int s, Domain d) {
    if (!b.coef[s].singleton()) return b.coef[s].lo;
    if (!b.order[s].singleton()) {
        i128 u = static_cast<i128>(b.coef[s].lo) * second_value(static_cast<int>(b.order[s].lo), d);
        return u > kUnbounded ? kUnbounded : static_cast<i64>(u);
    }
    return kUnbounded;
}

struct Pruned {};
struct Split {
    Box left, right;
};
using Outcome = std::variant<Pruned, Survivor, EliminationCertificate, Split>;

CertKind kind_of(const Box& b) {
    for (int s = 0; s < 3; ++s)
        if (!b.coef[s].singleton()) return CertKind::CoefficientTail;
    for (int s = 0; s < 3; ++s)
        if (!b.order[s].singleton()) return CertKind::OrderTail;
    return CertKind::Direct;
}

}  // namespace

ScreenReport screen_allowing(const CandidateSpace& space, i64 bound, i64 search_bound, int allowed, unsigned workers) {
    if (search_bound < 1 || bound < search_bound) throw PreconditionError("screen needs bound >= search_bound >= 1");
    if (!workers) workers = worker_count();
    const Domain d = space.domain;
    const size_t limit = static_cast<size_t>(allowed) + 1;
    ScreenReport rep;
    rep.space = space.name;
    rep.bound = bound;
    rep.search_bound = search_bound;
    rep.allowed = allowed;

    auto process = [&](const Box& b) -> Outcome {
        if (b.concrete()) {
            Triple t = b.triple();
            if (!space.contains(t)) return Pruned{};
            std::vector<Term> terms(t.begin(), t.end());
            auto small = range_sieve(terms, d, search_bound, 1).unset_positions(0, static_cast<i64>(limit));
            if (small.size() > static_cast<size_t>(allowed)) return EliminationCertificate{b, CertKind::Direct, small};
            auto full = range_sieve(terms, d, bound, 1).unset_positions(0, static_cast<i64>(limit));
            if (full.size() > static_cast<size_t>(allowed)) return EliminationCertificate{b, CertKind::Direct, full};
            return Survivor{t, full};
        }
        auto miss = box_misses(b, d, search_bound, static_cast<int>(limit));
        if (miss.size() > static_cast<size_t>(allowed)) return EliminationCertificate{b, kind_of(b), miss};
        int best = -1;
        i64 bu = kUnbounded;
        for (int s = 0; s < 3; ++s) {
            i64 u = uncertainty(b, s, d);
            if (u < bu) bu = u, best = s;
        }
        if (best < 0 || (bu > search_bound && !b.bounded()))
            throw SpaceNotClosable("space " + space.name + " not closable at search bound " + std::to_string(search_bound) +
                                   ": box " + format_box(b));
        Split sp{b, b};
        if (!b.coef[best].singleton()) {
            sp.left.coef[best].hi = b.coef[best].lo;
            sp.right.coef[best].lo = b.coef[best].lo + 1;
        } else {
            sp.left.order[best].hi = b.order[best].lo;
            sp.right.order[best].lo = b.order[best].lo + 1;
        }
        return sp;
    };

    std::vector<Box> frontier;
    Box root = space.initial;
    if (space.propagate(root)) frontier.push_back(root);
    constexpr i64 kMaxBoxes = 5'000'000;
    while (!frontier.empty()) {
        rep.stats.boxes += static_cast<i64>(frontier.size());
        if (rep.stats.boxes > kMaxBoxes) throw SpaceNotClosable("space " + space.name + " exceeded the box budget");
        std::vector<Outcome> out(frontier.size());
        parallel_for_each_index(frontier.size(), workers, [&](size_t i) { out[i] = process(frontier[i]); });
        std::vector<Box> next;
        for (size_t i = 0; i < out.size(); ++i) {
            if (frontier[i].concrete()) {
                Triple t = frontier[i].triple();
                for (auto& term : t) {
                    rep.stats.max_coef = std::max(rep.stats.max_coef, term.coef);
                    rep.stats.max_order = std::max<i64>(rep.stats.max_order, term.order);
                }
            }
            std::visit(
                [&](auto&& o) {
                    using O = std::decay_t<decltype(o)>;
                    if constexpr (std::is_same_v<O, Pruned>) {
                        rep.stats.pruned++;
                    } else if constexpr (std::is_same_v<O, Survivor>) {
                        rep.stats.concrete_scanned++;
                        rep.survivors.push_back(std::move(o));
                    } else if constexpr (std::is_same_v<O, EliminationCertificate>) {
                        if (o.kind == CertKind::Direct) rep.stats.concrete_scanned++;
                        rep.eliminations.push_back(std::move(o));
                    } else {
                        for (Box c : {o.left, o.right})
                            if (space.propagate(c)) next.push_back(c);
                            else rep.stats.pruned++;
                    }
                },
                out[i]);
        }
        frontier = std::move(next);
    }
    std::sort(rep.survivors.begin(), rep.survivors.end(),
              [](const Survivor& x, const Survivor& y) { return triple_less(x.triple, y.triple); });
    auto box_key = [](const Box& b) {
        std::array<i64, 12> k{};
        for (int s = 0; s < 3; ++s) {
            k[s] = b.order[s].lo, k[3 + s] = b.order[s].hi, k[6 + s] = b.coef[s].lo, k[9 + s] = b.coef[s].hi;
        }
        return k;
    };
    std::sort(rep.eliminations.begin(), rep.eliminations.end(),
              [&](const EliminationCertificate& x, const EliminationCertificate& y) { return box_key(x.target) < box_key(y.target); });
    return rep;
}

ScreenReport screen(const CandidateSpace& space, i64 bound, i64 search_bound, unsigned workers) {
    return screen_allowing(space, bound, search_bound, 0, workers);
}

std::vector<std::pair<Triple, i64>> unique_exception_scan(const CandidateSpace& space, i64 bound, i64 search_bound,
                                                          unsigned workers) {
    auto rep = screen_allowing(space, bound, search_bound, 1, workers);
    std::vector<std::pair<Triple, i64>> out;
    for (auto& s : rep.survivors)
        if (s.exceptions.size() == 1) out.emplace_back(s.triple, s.exceptions[0]);
    return out;
}

namespace {

// Values <= n over the slot ranges, enumerated argument-first. For x outside {0, 1} the binomial
// C(x,2) is positive, so c*p_k(x) grows with c, with k, and with |x| along each direction.
std::vector<i64> slot_values_impl(const Range& coef, const Range& order, Domain d, i64 n) {
    std::set<i64> vals{0};
    const i64 chi = std::min(coef.hi, n);
    for (i64 c = coef.lo; c <= chi; ++c) vals.insert(c);
    const int k0 = static_cast<int>(order.lo);
    for (int sign : {1, -1}) {
        if (sign < 0 && d == Domain::Naturals) break;
        for (i64 x = sign > 0 ? 2 : -1;; x += sign) {
            if (static_cast<i128>(coef.lo) * poly_value(k0, x) > n) break;
            for (i64 c = coef.lo; c <= chi; ++c) {
                if (static_cast<i128>(c) * poly_value(k0, x) > n) break;
                for (i64 k = k0; k <= order.hi; ++k) {
                    i128 v = static_cast<i128>(c) * poly_value(static_cast<int>(k), x);
                    if (v > n) break;
                    vals.insert(static_cast<i64>(v));
                }
            }
        }
    }
    return {vals.begin(), vals.end()};
}

}  // namespace

std::vector<i64> slot_values(const Range& coef, const Range& order, Domain d, i64 n) {
    return slot_values_impl(coef, order, d, n);
}

bool validate_certificate(const EliminationCertificate& cert, Domain d) {
    if (cert.witnesses.empty()) return false;
    for (i64 n : cert.witnesses) {
        if (n < 0) return false;
        std::array<std::vector<i64>, 3> sets;
        for (int s = 0; s < 3; ++s) sets[s] = slot_values(cert.target.coef[s], cert.target.order[s], d, n);
        for (i64 a : sets[0]) {
            if (a > n) break;
            for (i64 b : sets[1]) {
                if (a + b > n) break;
                if (std::binary_search(sets[2].begin(), sets[2].end(), n - a - b)) return false;
            }
        }
        if (cert.target.concrete()) {
            Triple t = cert.target.triple();
            if (member_with_witness(TripleSum{{t[0], t[1], t[2]}, d}, n)) return false;
        }
    }
    return true;
}

std::optional<TailCut> order_tail_cutoff(const std::array<Term, 2>& fixed, i64 c, Domain d, i64 search_bound) {
    if (c < 1) throw PreconditionError("coefficient must be >= 1");
    if (search_bound < 0) return std::nullopt;
    auto bits = range_sieve({fixed[0], fixed[1]}, d, search_bound, 1);
    for (i64 n = 0; n <= search_bound; ++n)
        if (!bits.test(n) && !(n >= c && bits.test(n - c))) return TailCut{n, n / c + 3};
    return std::nullopt;
}

std::optional<TailCut> coefficient_tail_cutoff(const std::array<Term, 2>& fixed, Domain d, i64 search_bound) {
    if (search_bound < 0) return std::nullopt;
    auto miss = range_sieve({fixed[0], fixed[1]}, d, search_bound, 1).unset_positions(0, 1);
    if (miss.empty()) return std::nullopt;
    return TailCut{miss[0], miss[0]};
}

CatalogDiffTriples compare_with_catalog(const std::vector<Triple>& survivors, const std::vector<Triple>& catalog) {
    auto sorted = [](std::vector<Triple> v) {
        std::sort(v.begin(), v.end(), triple_less);
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    auto s = sorted(survivors), c = sorted(catalog);
    CatalogDiffTriples diff;
    std::set_difference(c.begin(), c.end(), s.begin(), s.end(), std::back_inserter(diff.missing), triple_less);
    std::set_difference(s.begin(), s.end(), c.begin(), c.end(), std::back_inserter(diff.extra), triple_less);
    return diff;
}

std::vector<std::string> preset_names() { return {"liouville", "thm-1.1i", "thm-1.3", "thm-1.4", "unique-29", "mixed-34-list"}; }

CandidateSpace preset_space(const std::string& name) {
    CandidateSpace s;
    s.name = name;
    auto all = [&](Range coef, Range order) {
        for (int i = 0; i < 3; ++i) s.initial.coef[i] = coef, s.initial.order[i] = order;
    };
    if (name == "liouville") {
        all({1, kUnbounded}, {3, 3});
        s.coef_rule = CoefRule::Ascending;
    } else if (name == "thm-1.1i") {
        s.domain = Domain::Integers;
        all({1, kUnbounded}, {4, kUnbounded});
        s.same_order = true;
        s.coef_rule = CoefRule::Ascending;
        s.excluded_orders = {6};
    } else if (name == "thm-1.3" || name == "unique-29") {
        all({1, 1}, {3, kUnbounded});
        s.order_chain = true;
        s.min_max_order = 5;
    } else if (name == "thm-1.4") {
        all({1, kUnbounded}, {3, kUnbounded});
        s.order_chain = true;
        s.min_max_order = 5;
        s.some_coef_above_one = true;
        s.coef_rule = CoefRule::AscendingWhenOrdersEqual;
    } else if (name == "mixed-34-list") {
        all({1, kUnbounded}, {3, 4});
        s.order_chain = true;
        s.coef_rule = CoefRule::AscendingWhenOrdersEqual;
        s.required_orders = {3, 4};
    } else {
        throw UsageError("unknown preset '" + name + "'");
    }
    return s;
}

i64 preset_bound(const std::string& name) { return name == "thm-1.4" ? 100000 : 10000; }

int preset_allowed(const std::string& name) { return name == "unique-29" ? 1 : 0; }

}  // namespace polysum
