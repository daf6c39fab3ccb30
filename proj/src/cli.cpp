#include "polysum/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <random>
#include <sstream>

#include "polysum/catalog.hpp"
#include "polysum/descent.hpp"
#include "polysum/parallel.hpp"
#include "polysum/primepoly.hpp"
#include "polysum/screening.hpp"
#include "polysum/sumset.hpp"

namespace polysum {

namespace {

struct Outcome {
    std::vector<Record> records;
    bool mismatch = false;
};

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    std::istringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) {
        size_t used = 0;
        i64 v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) throw UsageError("expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

std::vector<std::string> triple_names(const std::vector<Triple>& ts) {
    std::vector<std::string> out;
    for (auto& t : ts) out.push_back(format_triple(t));
    return out;
}

std::vector<std::string> family_names(const FamilySet& fs) {
    std::vector<std::string> out;
    for (auto& f : fs.families) out.push_back(format_family(f));
    return out;
}

Record exceptions_record(const ExceptionReport& r) {
    Record rec;
    rec.set("kind", "exceptions")
        .set("sum", format_terms(r.sum().terms))
        .set("domain", domain_name(r.sum().domain))
        .set("bound", r.bound())
        .set("offsets", r.offsets())
        .set("result", r.exceptions())
        .set("complete_up_to", r.bound());
    return rec;
}

Record survivors_record(const ScreenReport& rep, const std::string& preset) {
    std::vector<std::string> names;
    std::vector<i64> sole;
    for (auto& s : rep.survivors) {
        names.push_back(format_triple(s.triple));
        if (rep.allowed > 0) sole.push_back(s.exceptions.empty() ? -1 : s.exceptions.front());
    }
    Record rec;
    rec.set("kind", "screen")
        .set("preset", preset)
        .set("bound", rep.bound)
        .set("search_bound", rep.search_bound)
        .set("allowed", rep.allowed)
        .set("survivors", names)
        .set("survivor_count", static_cast<i64>(names.size()))
        .set("eliminations", static_cast<i64>(rep.eliminations.size()))
        .set("boxes", rep.stats.boxes)
        .set("pruned", rep.stats.pruned)
        .set("concrete_scanned", rep.stats.concrete_scanned)
        .set("max_coef_examined", rep.stats.max_coef)
        .set("max_order_examined", rep.stats.max_order);
    if (rep.allowed > 0) rec.set("sole_exceptions", sole);
    return rec;
}

std::string preset_catalog(const std::string& preset) {
    if (preset == "liouville") return "liouville-7";
    if (preset == "thm-1.1i") return "thm-1.1i-20";
    if (preset == "thm-1.3") return "thm-1.3-31";
    if (preset == "thm-1.4") return "thm-1.4-64";
    if (preset == "unique-29") return "unique-29";
    if (preset == "mixed-34-list") return "mixed-34-25";
    throw UsageError("unknown preset '" + preset + "'");
}

Outcome run_screen(const std::string& preset, std::optional<i64> bound, i64 search_bound, bool certificates) {
    CandidateSpace space = preset_space(preset);
    i64 B = bound.value_or(preset_bound(preset));
    int allowed = preset_allowed(preset);
    ScreenReport rep = screen_allowing(space, B, std::min(search_bound, B), allowed, worker_count());
    std::vector<Triple> got;
    for (auto& s : rep.survivors)
        if (static_cast<int>(s.exceptions.size()) == allowed) got.push_back(s.triple);
    auto diff = compare_with_catalog(got, list_triples(preset_catalog(preset)));

    Outcome o;
    Record rec = survivors_record(rep, preset);
    rec.set("catalog", preset_catalog(preset))
        .set("missing", triple_names(diff.missing))
        .set("extra", triple_names(diff.extra))
        .set("diff_empty", diff.empty());
    o.records.push_back(rec);
    o.mismatch = !diff.empty();
    if (certificates) {
        for (auto& c : rep.eliminations) {
            Record cr;
            cr.set("kind", "certificate")
                .set("preset", preset)
                .set("target", format_box(c.target))
                .set("rule", cert_kind_name(c.kind))
                .set("witnesses", c.witnesses);
            o.records.push_back(cr);
        }
    }
    return o;
}

DiagonalForm form_from(const std::string& coefs, const std::vector<std::string>& conds) {
    auto cs = parse_int_list(coefs);
    if (cs.size() < 2 || cs.size() > 3) throw UsageError("form needs two or three coefficients, got '" + coefs + "'");
    for (i64 c : cs)
        if (c < 1) throw UsageError("form coefficients must be positive in '" + coefs + "'");
    DiagonalForm f(cs);
    for (auto& s : conds) {
        size_t v = 0;
        auto c = parse_condition(s, &v);
        if (v >= f.size()) throw UsageError("condition '" + s + "' names a missing variable");
        f.with(v, c);
    }
    return f;
}

Record reduction_record(const ReductionEntry& e) {
    Record rec;
    rec.set("sum", format_terms(e.source.terms))
        .set("domain", domain_name(e.source.domain))
        .set("M", e.M)
        .set("R", e.R)
        .set("form", format_form(e.form))
        .set("conditions", format_conditions(e.form));
    if (!e.label.empty()) rec.set("label", e.label);
    return rec;
}

Outcome run_verify_reductions(const std::vector<ReductionEntry>& entries, i64 bound) {
    Outcome o;
    for (auto& e : entries) {
        auto chk = verify_reduction(e, bound, worker_count());
        Record rec = reduction_record(e);
        rec.set("kind", "reduction-verify").set("bound", bound).set("holds", chk.holds);
        if (chk.counterexample) rec.set("counterexample", *chk.counterexample);
        o.mismatch |= !chk.holds;
        o.records.push_back(rec);
    }
    return o;
}

std::vector<ReductionEntry> essential_reductions() {
    std::vector<ReductionEntry> out;
    for (auto id : {"thm-1.5-35", "remaining-35"})
        for (auto& s : load_list(id).entries) out.push_back(canonical_reduction(s));
    return out;
}

Shape parse_shape(const std::string& s) {
    if (s == "square") return Shape::Square;
    if (s == "polygonal") return Shape::Polygonal;
    throw UsageError("unknown shape '" + s + "'");
}

Universe parse_universe(const std::string& s) {
    if (s == "all") return Universe::All;
    if (s == "odd") return Universe::Odd;
    if (s == "coprime") return Universe::Coprime;
    throw UsageError("unknown universe '" + s + "'");
}

std::string universe_name(Universe u) {
    switch (u) {
        case Universe::All: return "all";
        case Universe::Odd: return "odd";
        case Universe::Coprime: return "coprime";
    }
    return "?";
}

Record prime_record(const PrimePolyQuery& q, i64 bound, const std::vector<i64>& ex) {
    Record rec;
    rec.set("kind", "prime-scan")
        .set("a", q.a)
        .set("shape", q.shape == Shape::Square ? "square" : "polygonal")
        .set("universe", universe_name(q.universe))
        .set("bound", bound)
        .set("result", ex)
        .set("count", static_cast<i64>(ex.size()))
        .set("complete_up_to", bound);
    if (q.shape == Shape::Polygonal) rec.set("m", q.m);
    if (q.filter) rec.set("filter", std::vector<i64>{q.filter->modulus, q.filter->residue});
    if (!ex.empty()) rec.set("max", ex.back());
    else rec.set("max", "none");
    return rec;
}

// Descent operations by name, each checking its own postcondition.
struct DescentResult {
    std::vector<i64> output;
    bool ok;
};

DescentResult apply_descent(const std::string& op, const std::vector<i64>& a) {
    auto need = [&](size_t n) {
        if (a.size() != n) throw UsageError("operation '" + op + "' takes " + std::to_string(n) + " arguments");
    };
    if (op == "realis") {
        need(3);
        auto r = realis_transform(a[0], a[1], a[2]);
        i64 lhs = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        return {{r[0], r[1], r[2]}, lhs == 9 * (a[0] * a[0] + a[1] * a[1] + a[2] * a[2])};
    }
    if (op == "mod3") {
        need(3);
        int m = static_cast<int>(a[0]);
        auto [u, v] = descent_mod3(m, a[1], a[2]);
        bool ok = u * u + m * v * v == a[1] * a[1] + m * a[2] * a[2] && !(u % 3 == 0 && v % 3 == 0);
        return {{u, v}, ok};
    }
    if (op == "split36") {
        need(2);
        auto [x, y] = split_3_into_6(a[0], a[1]);
        return {{x, y}, 3 * x * x + 6 * y * y == a[0] * a[0] + 2 * a[1] * a[1]};
    }
    if (op == "mod5") {
        need(2);
        auto [u, v] = descent_mod5(a[0], a[1]);
        bool ok = u * u + 4 * v * v == a[0] * a[0] + 4 * a[1] * a[1] && !(u % 5 == 0 && v % 5 == 0);
        return {{u, v}, ok};
    }
    if (op == "seven") {
        need(2);
        auto [u, v] = descent_7_odd(a[0], a[1]);
        bool ok = u * u + 7 * v * v == a[0] * a[0] + 7 * a[1] * a[1] && (u & 1) && (v & 1);
        return {{u, v}, ok};
    }
    if (op == "split2n") {
        need(1);
        auto r = split_two_n(a[0]);
        return {{r[0], r[1], r[2]}, r[0] * r[0] + 9 * r[1] * r[1] + 18 * r[2] * r[2] == 2 * a[0]};
    }
    throw UsageError("unknown descent operation '" + op + "'");
}

const std::vector<std::string>& descent_ops() {
    static const std::vector<std::string> ops = {"realis", "mod3", "split36", "mod5", "seven", "split2n"};
    return ops;
}

// A random valid input for the operation.
std::vector<i64> random_descent_input(const std::string& op, std::mt19937_64& rng) {
    auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
    auto scaled = [&](i64 p, i64 v) {
        for (i64 e = uni(0, 3); e > 0; --e) v *= p;
        return v;
    };
    if (op == "realis") return {uni(-1000, 1000), uni(-1000, 1000), uni(-1000, 1000)};
    if (op == "mod3") {
        static const i64 ms[] = {2, 5, 8};
        i64 x, y;
        do x = uni(-300, 300), y = uni(-300, 300);
        while (x == 0 && y == 0);
        i64 s = scaled(3, 1);
        return {ms[uni(0, 2)], x * s, y * s};
    }
    if (op == "split36") {
        i64 v = uni(-1000, 1000), t = uni(-300, 300);
        return {(uni(0, 1) ? v : -v) + 3 * t, v};
    }
    if (op == "mod5") {
        i64 x, y;
        do x = uni(-300, 300), y = uni(-300, 300);
        while (x == 0 && y == 0);
        i64 s = scaled(5, 1);
        return {x * s, y * s};
    }
    if (op == "seven") {
        i64 s = scaled(2, 1);
        return {(2 * uni(-300, 300) + 1) * s, (2 * uni(-300, 300) + 1) * s};
    }
    i64 n;
    do n = 3 * uni(0, 300000) + 2;
    while (three_square_excluded(n));
    return {n};
}

Outcome run_descent(const std::optional<std::string>& op, const std::vector<i64>& args, i64 samples, u64 seed) {
    Outcome o;
    if (op && !args.empty()) {
        auto r = apply_descent(*op, args);
        Record rec;
        rec.set("kind", "descent-check").set("op", *op).set("input", args).set("output", r.output).set("ok", r.ok);
        o.records.push_back(rec);
        o.mismatch = !r.ok;
        return o;
    }
    std::vector<std::string> ops = op ? std::vector<std::string>{*op} : descent_ops();
    for (auto& name : ops) {
        std::mt19937_64 rng(seed);
        i64 failures = 0;
        std::vector<i64> first_failure;
        for (i64 i = 0; i < samples; ++i) {
            auto in = random_descent_input(name, rng);
            if (!apply_descent(name, in).ok) {
                if (failures++ == 0) first_failure = in;
            }
        }
        Record rec;
        rec.set("kind", "descent-check").set("op", name).set("samples", samples).set("seed", static_cast<i64>(seed)).set("failures",
                                                                                                                         failures);
        if (failures) rec.set("first_failure", first_failure);
        o.mismatch |= failures > 0;
        o.records.push_back(rec);
    }
    return o;
}

Outcome run_conjecture(const std::string& preset, std::optional<i64> bound) {
    Outcome o;
    const unsigned w = worker_count();
    auto add_exceptions = [&](const ExceptionReport& r, const std::string& label) {
        Record rec = exceptions_record(r);
        rec.set("conjecture", preset).set("item", label).set("holds", r.exceptions().empty());
        o.mismatch |= !r.exceptions().empty();
        o.records.push_back(rec);
    };
    if (preset == "1.1") {
        for (auto& s : load_list("conj-1.1-3").entries) add_exceptions(exceptions(s, bound.value_or(1000000), w), format_terms(s.terms));
    } else if (preset == "1.2") {
        for (int m = 3; m <= 10; ++m) {
            std::vector<i64> offsets;
            for (i64 r = 0; r <= m - 3; ++r) offsets.push_back(r);
            std::vector<Term> terms = {{1, m + 1}, {1, m + 2}, {1, m + 3}};
            add_exceptions(offset_universal_check(terms, Domain::Naturals, offsets, bound.value_or(500000), w), "m=" + std::to_string(m));
        }
    } else if (preset == "1.3" || preset == "1.4") {
        std::string id = preset == "1.3" ? "thm-1.3-31" : "thm-1.4-64";
        i64 B = bound.value_or(preset == "1.3" ? 500000 : 100000);
        for (auto& s : load_list(id).entries) add_exceptions(exceptions(s, B, w), format_terms(s.terms));
    } else if (preset == "1.7") {
        i64 B = bound.value_or(1000000);
        for (auto& f : prime_facts()) {
            if (f.kind != "conj-1.7" && f.kind != "s") continue;
            PrimePolyQuery q;
            q.a = 2;
            q.shape = Shape::Polygonal;
            q.m = static_cast<int>(f.key.at("m"));
            q.universe = Universe::Odd;
            if (f.key.count("q")) q.filter = ResidueFilter{f.key.at("q"), f.key.at("r")};
            auto ex = exception_scan(q, B, w);
            Record rec = prime_record(q, B, ex);
            rec.set("conjecture", preset);
            bool ok;
            if (f.max) {
                ok = !ex.empty() && ex.back() == *f.max;
                rec.set("expected_max", *f.max);
            } else {
                ok = ex == f.values;
                rec.set("expected", f.values);
            }
            rec.set("holds", ok);
            o.mismatch |= !ok;
            o.records.push_back(rec);
        }
    } else if (preset == "1.8-spot") {
        // Every listed triple: no Z-exception up to the bound, and some N-exception up to it.
        i64 B = bound.value_or(100000);
        auto entries = load_list("conj-1.8").entries;
        std::vector<Record> recs(entries.size());
        std::vector<char> bad(entries.size(), 0);
        parallel_for_each_index(entries.size(), w, [&](size_t i) {
            TripleSum z = entries[i];
            z.domain = Domain::Integers;
            TripleSum n = entries[i];
            n.domain = Domain::Naturals;
            auto zr = exceptions(z, B, 1);
            auto nr = exceptions(n, B, 1);
            Record rec;
            rec.set("kind", "conjecture-spot")
                .set("conjecture", preset)
                .set("sum", format_terms(z.terms))
                .set("bound", B)
                .set("z_exceptions", zr.exceptions())
                .set("n_first_exception", nr.exceptions().empty() ? i64{-1} : nr.exceptions().front());
            bool ok = zr.exceptions().empty() && !nr.exceptions().empty();
            rec.set("holds", ok);
            bad[i] = !ok;
            recs[i] = rec;
        });
        for (size_t i = 0; i < recs.size(); ++i) o.mismatch |= bad[i] != 0;
        o.records = std::move(recs);
    } else {
        throw UsageError("unknown conjecture preset '" + preset + "' (expected 1.1, 1.2, 1.3, 1.4, 1.7, 1.8-spot)");
    }
    return o;
}

}  // namespace

std::string format_condition(size_t var, const CongruenceCondition& c) {
    std::string s(1, "xyz"[var]);
    s += ':' + std::to_string(c.modulus) + ':';
    for (size_t i = 0; i < c.residues.size(); ++i) s += (i ? "," : "") + std::to_string(c.residues[i]);
    if (c.lower_bound) s += ":>=" + std::to_string(*c.lower_bound);
    return s;
}

std::vector<std::string> format_conditions(const DiagonalForm& f) {
    std::vector<std::string> out;
    for (size_t v = 0; v < f.size(); ++v)
        if (f.conds[v]) out.push_back(format_condition(v, *f.conds[v]));
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polygonal sums, diagonal ternary forms and prime decompositions"};
    app.require_subcommand(1);
    std::string format = "lines";
    app.add_option("--format", format, "Report format: lines or csv")->check(CLI::IsMember({"lines", "csv"}));

    std::string sum, domain = "N", form, preset, op, shape = "square", universe, filter;
    std::vector<std::string> conds;
    std::string offsets = "0", map;
    i64 bound = 10000, search_bound = 2000, samples = 10000, a = 1;
    int m = 5;
    u64 seed = 1;
    std::optional<i64> witness;
    std::vector<i64> op_args;
    bool certificates = false, errata = false, catalog = false, essential = false;

    auto* except = app.add_subcommand("except", "Exception list of a polygonal sum");
    except->add_option("--sum", sum, "Sum such as p_4+p_5+2*p_8")->required();
    except->add_option("--domain", domain, "N or Z");
    except->add_option("--bound", bound);
    except->add_option("--offsets", offsets, "Comma-separated constants added to the sum");
    except->add_option("--witness", witness, "Report a witness for this n instead");

    auto* scr = app.add_subcommand("screen", "Screen a candidate space and compare with its catalog list");
    scr->add_option("--preset", preset)->required()->check(CLI::IsMember(preset_names()));
    auto* scr_bound = scr->add_option("--bound", bound);
    scr->add_option("--search-bound", search_bound);
    scr->add_flag("--certificates", certificates, "Emit one record per elimination certificate");

    auto* qex = app.add_subcommand("qform-except", "Exception list of a diagonal form");
    qex->add_option("--form", form, "Coefficients a,b,c")->required();
    qex->add_option("--cond", conds, "Variable condition var:modulus:residues[:>=lb]");
    qex->add_option("--bound", bound);
    qex->add_option("--map", map, "M,R: report n with M*n+R not represented");

    auto* qver = app.add_subcommand("qform-verify-catalog", "Compare form exception sets with the catalog families");
    auto* qver_bound = qver->add_option("--bound", bound);
    qver->add_flag("--errata", errata, "Use the corrected family lists where the printed ones disagree");

    auto* red = app.add_subcommand("reduce", "Square-completion reduction of a polygonal sum to a form");
    red->add_option("--sum", sum)->required();
    red->add_option("--domain", domain);

    auto* vred = app.add_subcommand("verify-reduction", "Check reductions over a range of n");
    vred->add_option("--sum", sum);
    vred->add_option("--domain", domain);
    vred->add_flag("--catalog", catalog, "Check the explicit reduction catalog");
    vred->add_flag("--essential", essential, "Check canonical reductions of the 70 essential triples");
    vred->add_option("--bound", bound);

    auto* prime = app.add_subcommand("prime-scan", "Exceptions to n = p + a*x^2 or n = p + a*p_m(x)");
    prime->add_option("--a", a)->required()->check(CLI::PositiveNumber);
    prime->add_option("--shape", shape)->check(CLI::IsMember({"square", "polygonal"}));
    prime->add_option("--m", m);
    prime->add_option("--universe", universe)->check(CLI::IsMember({"all", "odd", "coprime"}));
    prime->add_option("--bound", bound);
    prime->add_option("--filter", filter, "Prime residue filter q:r");

    auto* desc = app.add_subcommand("descent-check", "Run descent identities on given or random inputs");
    desc->add_option("--op", op)->check(CLI::IsMember(descent_ops()));
    desc->add_option("--args", op_args)->delimiter(',');
    desc->add_option("--samples", samples);
    desc->add_option("--seed", seed);

    auto* conj = app.add_subcommand("conjecture", "Bounded verification of a conjecture preset");
    conj->add_option("--preset", preset)->required()->check(CLI::IsMember({"1.1", "1.2", "1.3", "1.4", "1.7", "1.8-spot"}));
    auto* conj_bound = conj->add_option("--bound", bound);

    if (!args.empty() && !args[0].starts_with("-")) {
        bool known = false;
        for (auto* sub : app.get_subcommands({})) known |= sub->get_name() == args[0];
        if (!known) {
            err << "usage error: unknown subcommand '" << args[0] << "'\n";
            return kExitUsage;
        }
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (bound < 0) throw UsageError("--bound must be nonnegative");
        if (except->parsed()) {
            TripleSum s{parse_terms(sum), parse_domain(domain)};
            validate(s);
            if (witness) {
                if (*witness < 0) throw UsageError("--witness must be nonnegative");
                auto w = member_with_witness(s, *witness);
                Record rec;
                rec.set("kind", "witness").set("sum", format_terms(s.terms)).set("domain", domain_name(s.domain)).set("n", *witness);
                if (w) rec.set("witness", *w);
                else rec.set("witness", "none");
                o.records.push_back(rec);
            } else {
                auto offs = parse_int_list(offsets);
                for (i64 r : offs)
                    if (r < 0) throw UsageError("offsets must be nonnegative");
                if (s.terms.size() > 4) throw UsageError("at most four terms are supported");
                auto rep = offs == std::vector<i64>{0} ? exceptions(s, bound, worker_count())
                                                       : offset_universal_check(s.terms, s.domain, offs, bound, worker_count());
                o.records.push_back(exceptions_record(rep));
            }
        } else if (scr->parsed()) {
            std::optional<i64> b;
            if (scr_bound->count()) b = bound;
            o = run_screen(preset, b, search_bound, certificates);
        } else if (qex->parsed()) {
            DiagonalForm f = form_from(form, conds);
            Record rec;
            rec.set("kind", "qform-except").set("form", format_form(f)).set("conditions", format_conditions(f)).set("bound", bound);
            if (!map.empty()) {
                auto mr = parse_int_list(map);
                if (mr.size() != 2 || mr[0] < 1) throw UsageError("--map expects M,R with M >= 1");
                rec.set("M", mr[0]).set("R", mr[1]).set("result", mapped_exception_scan(f, mr[0], mr[1], bound, worker_count()));
            } else {
                rec.set("result", qf_exception_set(f, bound, worker_count()));
            }
            rec.set("complete_up_to", bound);
            o.records.push_back(rec);
        } else if (qver->parsed()) {
            i64 B = qver_bound->count() ? bound : 100000;
            auto entries = regular_form_catalog();
            if (errata) {
                for (auto& fix : regular_form_errata())
                    for (auto& e : entries)
                        if (e.display == fix.display) e = fix;
            }
            for (auto& e : entries) {
                auto d = verify_catalog_form(e, B, worker_count());
                Record rec;
                rec.set("kind", "qform-verify")
                    .set("display", e.display)
                    .set("form", format_form(DiagonalForm(e.coefs[0], e.coefs[1], e.coefs[2])))
                    .set("families", family_names(e.families))
                    .set("bound", B)
                    .set("equal", d.equal)
                    .set("unlisted_exceptions", d.unlisted_exceptions)
                    .set("listed_but_represented", d.listed_but_represented);
                o.mismatch |= !d.equal;
                o.records.push_back(rec);
            }
        } else if (red->parsed()) {
            TripleSum s{parse_terms(sum), parse_domain(domain)};
            validate(s);
            Record rec = reduction_record(canonical_reduction(s));
            rec.set("kind", "reduction");
            o.records.push_back(rec);
        } else if (vred->parsed()) {
            std::vector<ReductionEntry> entries;
            if (catalog) entries = explicit_reductions();
            if (essential) {
                auto more = essential_reductions();
                entries.insert(entries.end(), more.begin(), more.end());
            }
            if (!sum.empty()) {
                TripleSum s{parse_terms(sum), parse_domain(domain)};
                validate(s);
                entries.push_back(canonical_reduction(s));
            }
            if (entries.empty()) throw UsageError("verify-reduction needs --sum, --catalog or --essential");
            o = run_verify_reductions(entries, bound);
        } else if (prime->parsed()) {
            PrimePolyQuery q;
            q.a = a;
            q.shape = parse_shape(shape);
            q.m = m;
            if (q.shape == Shape::Polygonal && m < 3) throw UsageError("--m must be at least 3");
            q.universe = parse_universe(universe.empty() ? (q.shape == Shape::Square ? "coprime" : "odd") : universe);
            if (!filter.empty()) {
                auto colon = filter.find(':');
                if (colon == std::string::npos) throw UsageError("--filter expects q:r");
                auto qv = parse_int_list(filter.substr(0, colon)), rv = parse_int_list(filter.substr(colon + 1));
                if (qv.size() != 1 || rv.size() != 1 || qv[0] < 1 || rv[0] < 0 || rv[0] >= qv[0])
                    throw UsageError("--filter expects q:r with 0 <= r < q");
                q.filter = ResidueFilter{qv[0], rv[0]};
            }
            if (bound < 2) throw UsageError("--bound must be at least 2");
            auto ex = exception_scan(q, bound, worker_count());
            o.records.push_back(prime_record(q, bound, ex));
        } else if (desc->parsed()) {
            std::optional<std::string> o_op;
            if (!op.empty()) o_op = op;
            if (!op_args.empty() && !o_op) throw UsageError("--args requires --op");
            if (samples < 1) throw UsageError("--samples must be positive");
            o = run_descent(o_op, op_args, samples, seed);
        } else if (conj->parsed()) {
            std::optional<i64> b;
            if (conj_bound->count()) b = bound;
            o = run_conjecture(preset, b);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpaceNotClosable& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    out << emit(o.records, parse_format(format));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed_ms=" << ms << " workers=" << worker_count() << "\n";
    return o.mismatch ? kExitMismatch : kExitOk;
}

}  // namespace polysum
