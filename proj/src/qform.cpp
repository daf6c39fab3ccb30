#include "polysum/qform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polysum/bitset.hpp"
#include "polysum/parallel.hpp"
#include "polysum/sumset.hpp"

namespace polysum {

bool CongruenceCondition::allows(i64 y) const {
    if (lower_bound && y < *lower_bound) return false;
    if (residues.empty()) return true;
    i64 r = floor_mod(y, modulus);
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

CongruenceCondition CongruenceCondition::plus_minus(i64 r, i64 q) {
    CongruenceCondition c;
    c.modulus = q;
    c.residues = {floor_mod(r, q)};
    if (floor_mod(-r, q) != c.residues[0]) c.residues.push_back(floor_mod(-r, q));
    std::sort(c.residues.begin(), c.residues.end());
    return c;
}

DiagonalForm::DiagonalForm(std::vector<i64> c) : coefs(std::move(c)), conds(coefs.size()) {
    if (coefs.empty() || coefs.size() > 3) throw PreconditionError("diagonal forms take 1 to 3 coefficients");
    for (i64 a : coefs)
        if (a < 1) throw PreconditionError("form coefficients must be >= 1");
}

DiagonalForm& DiagonalForm::with(size_t var, CongruenceCondition c) {
    conds.at(var) = std::move(c);
    return *this;
}

bool DiagonalForm::conditioned() const {
    return std::any_of(conds.begin(), conds.end(), [](auto& c) { return c.has_value(); });
}

i64 DiagonalForm::eval(const std::vector<i64>& y) const {
    i128 s = 0;
    for (size_t i = 0; i < coefs.size(); ++i) s += static_cast<i128>(coefs[i]) * y[i] * y[i];
    return narrow(s);
}

std::string format_form(const DiagonalForm& f) {
    std::string s;
    for (size_t i = 0; i < f.coefs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.coefs[i]);
    }
    return s;
}

std::optional<std::vector<i64>> qf_represents(const DiagonalForm& f, i64 n) {
    if (n < 0) return std::nullopt;
    const size_t k = f.size();
    std::vector<i64> y(k, 0);
    auto rec = [&](auto&& self, size_t v, i64 rest) -> bool {
        const i64 a = f.coefs[v];
        if (v + 1 == k) {
            if (rest % a) return false;
            i64 t;
            if (!is_square(rest / a, &t)) return false;
            if (f.allows(v, t)) y[v] = t;
            else if (f.allows(v, -t)) y[v] = -t;
            else return false;
            return true;
        }
        for (i64 t = 0; static_cast<i128>(a) * t * t <= rest; ++t) {
            i64 use;
            if (f.allows(v, t)) use = t;
            else if (f.allows(v, -t)) use = -t;
            else continue;
            y[v] = use;
            if (self(self, v + 1, rest - a * t * t)) return true;
        }
        return false;
    };
    if (rec(rec, 0, n)) return y;
    return std::nullopt;
}

std::vector<i64> form_value_set(const DiagonalForm& f, size_t var, i64 bound) {
    std::vector<i64> out;
    const i64 a = f.coefs[var];
    for (i64 t = 0; static_cast<i128>(a) * t * t <= bound; ++t)
        if (f.allows_abs(var, t)) out.push_back(a * t * t);
    return out;
}

static RangeBitset form_sieve(const DiagonalForm& f, i64 bound, unsigned workers) {
    std::vector<std::vector<i64>> sets;
    for (size_t v = 0; v < f.size(); ++v) sets.push_back(form_value_set(f, v, bound));
    return sumset_bitset(std::move(sets), bound, workers);
}

std::vector<i64> qf_exception_set(const DiagonalForm& f, i64 bound, unsigned workers) {
    if (bound < 0) return {};
    if (!workers) workers = worker_count();
    return form_sieve(f, bound, workers).unset_positions();
}

std::vector<i64> mapped_exception_scan(const DiagonalForm& f, i64 M, i64 R, i64 bound, unsigned workers) {
    if (M < 1) throw PreconditionError("multiplier must be >= 1");
    if (!workers) workers = worker_count();
    std::vector<i64> out;
    if (bound < 0) return out;
    const i64 top = checked_add(checked_mul(M, bound), R);
    if (top < 0) throw PreconditionError("mapped values must be >= 0");
    if (top <= 400'000'000) {
        auto bits = form_sieve(f, top, workers);
        for (i64 n = 0; n <= bound; ++n)
            if (!bits.test(M * n + R)) out.push_back(n);
        return out;
    }
    std::vector<char> miss(static_cast<size_t>(bound) + 1, 0);
    parallel_for_each_index(static_cast<size_t>(bound) + 1, workers,
                            [&](size_t n) { miss[n] = !qf_represents(f, M * static_cast<i64>(n) + R); });
    for (i64 n = 0; n <= bound; ++n)
        if (miss[n]) out.push_back(n);
    return out;
}

bool three_square_excluded(i64 n) {
    if (n <= 0) return false;
    while (n % 4 == 0) n /= 4;
    return n % 8 == 7;
}

bool Family::contains(i64 n) const {
    if (n < 0 || n % s) return false;
    i64 m = n / s;
    while (true) {
        if (m >= r && (m - r) % q == 0) return true;
        if (t == 1 || m == 0 || m % t) return false;
        m /= t;
    }
}

bool FamilySet::contains(i64 n) const {
    return std::any_of(families.begin(), families.end(), [&](const Family& f) { return f.contains(n); });
}

std::vector<i64> family_enumerate(const FamilySet& fs, i64 bound) {
    std::vector<i64> out;
    for (auto& f : fs.families) {
        for (i128 scale = f.s; scale <= bound; scale *= f.t) {
            for (i128 v = scale * f.r; v <= bound; v += scale * f.q) out.push_back(static_cast<i64>(v));
            if (f.t == 1 || scale == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_family(const Family& f) {
    std::ostringstream os;
    os << f.s << ':' << f.t << ':' << f.q << ':' << f.r;
    return os.str();
}

Family parse_family(const std::string& s) {
    Family f;
    char c1, c2, c3;
    std::istringstream is(s);
    if (!(is >> f.s >> c1 >> f.t >> c2 >> f.q >> c3 >> f.r) || c1 != ':' || c2 != ':' || c3 != ':' || f.s < 1 || f.t < 1 ||
        f.q < 1 || f.r < 0)
        throw UsageError("bad family '" + s + "' (expected s:t:q:r)");
    return f;
}

CatalogDiff verify_catalog_form(const CatalogForm& entry, i64 bound, unsigned workers) {
    DiagonalForm f(entry.coefs[0], entry.coefs[1], entry.coefs[2]);
    auto exc = qf_exception_set(f, bound, workers);
    auto fam = family_enumerate(entry.families, bound);
    CatalogDiff d;
    std::set_difference(exc.begin(), exc.end(), fam.begin(), fam.end(), std::back_inserter(d.unlisted_exceptions));
    std::set_difference(fam.begin(), fam.end(), exc.begin(), exc.end(), std::back_inserter(d.listed_but_represented));
    d.equal = d.unlisted_exceptions.empty() && d.listed_but_represented.empty();
    return d;
}

ReductionEntry canonical_reduction(const TripleSum& sum) {
    validate(sum);
    if (sum.terms.size() > 3) throw PreconditionError("reductions take at most 3 terms");
    ReductionEntry e;
    e.source = sum;
    e.label = format_terms(sum.terms) + " " + domain_name(sum.domain);
    i64 M = 1;
    for (auto& t : sum.terms)
        if (t.order != 4) M = lcm64(M, 8 * i64(t.order - 2));
    e.M = M;
    std::vector<i64> coefs;
    std::vector<std::optional<CongruenceCondition>> conds;
    for (auto& t : sum.terms) {
        if (t.order == 4) {
            coefs.push_back(checked_mul(M, t.coef));
            conds.emplace_back();
            continue;
        }
        auto sc = square_completion(t.order);
        i64 c = checked_mul(M / sc.stretch, t.coef);
        coefs.push_back(c);
        e.R = checked_add(e.R, checked_mul(c, sc.offset));
        if (sum.domain == Domain::Integers) {
            conds.push_back(CongruenceCondition::plus_minus(sc.residue, sc.step));
        } else {
            CongruenceCondition cc;
            cc.modulus = sc.step;
            cc.residues = {floor_mod(-sc.residue, sc.step)};
            cc.lower_bound = -sc.residue;
            conds.push_back(cc);
        }
    }
    e.form = DiagonalForm(coefs);
    e.form.conds = conds;
    if (!verify_reduction(e, 500, 1).holds) throw std::logic_error("canonical reduction self-check failed for " + e.label);
    return e;
}

ReductionCheck verify_reduction(const ReductionEntry& e, i64 bound, unsigned workers) {
    if (!workers) workers = worker_count();
    ReductionCheck rc;
    if (bound < 0) return rc;
    auto bits = range_sieve(e.source.terms, e.source.domain, bound, workers);
    auto form_miss = mapped_exception_scan(e.form, e.M, e.R, bound, workers);
    auto sum_miss = bits.unset_positions();
    std::vector<i64> diff;
    std::set_symmetric_difference(sum_miss.begin(), sum_miss.end(), form_miss.begin(), form_miss.end(), std::back_inserter(diff));
    if (!diff.empty()) {
        rc.holds = false;
        rc.counterexample = diff.front();
    }
    return rc;
}

i64 rep_count_constrained(const DiagonalForm& f, i64 n, std::optional<VarConstraint> c) {
    if (n < 0) return 0;
    const size_t k = f.size();
    std::vector<i64> y(k, 0);
    auto ok = [&](size_t v, i64 val) {
        if (!f.allows(v, val)) return false;
        if (c && c->var == v && floor_mod(val, c->modulus) != floor_mod(c->residue, c->modulus)) return false;
        return true;
    };
    auto rec = [&](auto&& self, size_t v, i64 rest) -> i64 {
        const i64 a = f.coefs[v];
        if (v + 1 == k) {
            if (rest % a) return 0;
            i64 t;
            if (!is_square(rest / a, &t)) return 0;
            if (t == 0) return ok(v, 0) ? 1 : 0;
            return (ok(v, t) ? 1 : 0) + (ok(v, -t) ? 1 : 0);
        }
        i64 total = 0;
        i64 lim = static_cast<i64>(isqrt(static_cast<u64>(rest / a)));
        for (i64 t = 0; t <= lim; ++t) {
            const i64 signs = t == 0 ? (ok(v, 0) ? 1 : 0) : (ok(v, t) ? 1 : 0) + (ok(v, -t) ? 1 : 0);
            if (signs) total += signs * self(self, v + 1, rest - a * t * t);
        }
        return total;
    };
    return rec(rec, 0, n);
}

}  // namespace polysum
