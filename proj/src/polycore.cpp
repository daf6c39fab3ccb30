#include "polysum/polycore.hpp"

#include <algorithm>
#include <cctype>

namespace polysum {

i64 poly_value(int m, i64 x) {
    if (m < 3) throw PreconditionError("polygonal order must be >= 3");
    i128 v = (static_cast<i128>(m - 2) * x * x - static_cast<i128>(m - 4) * x) / 2;
    return narrow(v);
}

std::vector<std::pair<i64, i64>> poly_stream(const Term& t, Domain d, i64 bound) {
    validate(t);
    std::vector<std::pair<i64, i64>> out;
    if (bound < 0) return out;
    auto value = [&](i64 x) -> std::optional<i64> {
        i128 v = static_cast<i128>(poly_value(t.order, x)) * t.coef;
        if (v > bound) return std::nullopt;
        return static_cast<i64>(v);
    };
    out.emplace_back(0, 0);
    // p_m is convex in x with minimum near 0, so each direction is monotone from x=1 / x=-1.
    bool pos = true, neg = d == Domain::Integers;
    for (i64 x = 1; pos || neg; ++x) {
        if (pos) {
            if (auto v = value(x)) out.emplace_back(x, *v);
            else pos = false;
        }
        if (neg) {
            if (auto v = value(-x)) out.emplace_back(-x, *v);
            else neg = false;
        }
    }
    return out;
}

std::vector<i64> poly_values_upto(const Term& t, Domain d, i64 bound) {
    std::vector<i64> vals;
    for (auto [x, v] : poly_stream(t, d, bound)) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

SquareCompletion square_completion(int m) {
    if (m < 3) throw PreconditionError("polygonal order must be >= 3");
    return {8 * i64(m - 2), i64(m - 4) * (m - 4), 2 * i64(m) - 4, i64(m) - 4};
}

std::optional<i64> is_generalized_polygonal(int m, i64 n, Domain d) {
    if (n < 0) return std::nullopt;
    auto sc = square_completion(m);
    i64 lhs = narrow(static_cast<i128>(sc.stretch) * n + sc.offset);
    i64 w;
    if (!is_square(lhs, &w)) return std::nullopt;
    std::optional<i64> best;
    for (i64 s : {w, -w}) {
        i64 num = sc.residue + s;
        if (num % sc.step != 0) continue;
        i64 x = num / sc.step;
        if (d == Domain::Naturals && x < 0) continue;
        if (!best || (*best < 0 && x >= 0) || ((*best < 0) == (x < 0) && std::abs(x) < std::abs(*best)))
            best = x;
    }
    return best;
}

i64 second_value(int m, Domain d) {
    return d == Domain::Integers && m >= 5 ? m - 3 : m;
}

void validate(const Term& t) {
    if (t.coef < 1) throw PreconditionError("coefficient must be >= 1");
    if (t.order < 3) throw PreconditionError("polygonal order must be >= 3");
}

void validate(const TripleSum& s) {
    if (s.terms.empty()) throw PreconditionError("sum needs at least one term");
    for (auto& t : s.terms) validate(t);
}

Domain parse_domain(std::string_view s) {
    if (s == "N" || s == "n" || s == "naturals") return Domain::Naturals;
    if (s == "Z" || s == "z" || s == "integers") return Domain::Integers;
    throw UsageError("unknown domain '" + std::string(s) + "' (expected N or Z)");
}

std::string domain_name(Domain d) { return d == Domain::Naturals ? "N" : "Z"; }

static Term parse_term(std::string_view tok) {
    auto bad = [&]() { return UsageError("cannot parse term '" + std::string(tok) + "'"); };
    size_t i = 0;
    i64 coef = 1;
    if (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
        coef = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
            coef = checked_add(checked_mul(coef, 10), tok[i] - '0');
            ++i;
        }
        if (i < tok.size() && tok[i] == '*') ++i;
    }
    if (i >= tok.size() || tok[i] != 'p') throw bad();
    ++i;
    if (i < tok.size() && tok[i] == '_') ++i;
    if (i >= tok.size()) throw bad();
    i64 order = 0;
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw bad();
        order = checked_add(checked_mul(order, 10), tok[i] - '0');
        if (order > 1000000) throw bad();
    }
    Term t{coef, static_cast<int>(order)};
    if (t.coef < 1 || t.order < 3) throw UsageError("term '" + std::string(tok) + "' needs coefficient >= 1 and order >= 3");
    return t;
}

std::vector<Term> parse_terms(std::string_view s) {
    std::string compact;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    std::vector<Term> out;
    std::string_view rest = compact;
    while (true) {
        auto pos = rest.find('+');
        out.push_back(parse_term(rest.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    return out;
}

std::string format_term(const Term& t) {
    std::string s = t.coef == 1 ? "" : std::to_string(t.coef) + "*";
    return s + "p_" + std::to_string(t.order);
}

std::string format_terms(const std::vector<Term>& ts) {
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) s += '+';
        s += format_term(ts[i]);
    }
    return s;
}

}  // namespace polysum
