#include "polysum/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polysum/sumset.hpp"

namespace polysum {

// Defined in the generated source.
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_assets();

std::string_view asset_text(std::string_view name) {
    for (auto& [k, v] : embedded_assets())
        if (k == name) return v;
    throw UnknownIdentifier("unknown asset '" + std::string(name) + "'");
}

std::vector<std::string> asset_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : embedded_assets()) out.emplace_back(k);
    return out;
}

namespace {

std::vector<std::vector<std::string>> records(std::string_view name) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in{std::string(asset_text(name))};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> f;
        for (std::string w; ls >> w;) f.push_back(w);
        if (!f.empty()) out.push_back(std::move(f));
    }
    return out;
}

std::vector<i64> parse_ints(const std::string& s) {
    std::vector<i64> out;
    if (s == "-") return out;
    std::istringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) out.push_back(std::stoll(tok));
    return out;
}

std::string canonical_id(const std::string& id) { return id == "conj-1.9" ? "conj-1.8" : id; }

std::optional<size_t> advertised_count(const std::string& id) {
    auto pos = id.find_last_of('-');
    if (pos == std::string::npos) return std::nullopt;
    std::string tail = id.substr(pos + 1);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return std::nullopt;
    if (id.starts_with("conj-1.")) return std::nullopt;
    return std::stoul(tail);
}

// "p_3+p_3+p_k" with the variable order given separately.
std::vector<Term> terms_with_order(const std::string& sum, char var, int order, std::vector<size_t>* slots) {
    std::vector<Term> terms;
    std::istringstream in(sum);
    size_t slot = 0;
    for (std::string tok; std::getline(in, tok, '+'); ++slot) {
        if (!tok.empty() && tok.back() == var && var != 0) {
            tok.pop_back();
            terms.push_back(parse_terms(tok + std::to_string(order)).front());
            if (slots) slots->push_back(slot);
        } else {
            terms.push_back(parse_terms(tok).front());
        }
    }
    return terms;
}

}  // namespace

std::vector<std::string> list_ids() {
    std::vector<std::string> ids;
    for (auto& r : records("lists"))
        if (std::find(ids.begin(), ids.end(), r[0]) == ids.end()) ids.push_back(r[0]);
    return ids;
}

TripleList load_list(const std::string& raw_id) {
    const std::string id = canonical_id(raw_id);
    TripleList pl{id, {}};
    bool found = false;
    for (auto& r : records("lists")) {
        if (r[0] != id) continue;
        found = true;
        Domain d = parse_domain(r[1]);
        if (r.size() >= 4 && r[3].starts_with("k=")) {
            auto dots = r[3].find("..");
            int lo = std::stoi(r[3].substr(2, dots - 2)), hi = std::stoi(r[3].substr(dots + 2));
            std::vector<i64> except;
            if (r.size() >= 5 && r[4].starts_with("except=")) except = parse_ints(r[4].substr(7));
            for (int k = lo; k <= hi; ++k) {
                if (std::find(except.begin(), except.end(), k) != except.end()) continue;
                pl.entries.push_back(TripleSum{terms_with_order(r[2], 'k', k, nullptr), d});
            }
        } else {
            pl.entries.push_back(TripleSum{parse_terms(r[2]), d});
        }
    }
    if (!found) throw UnknownIdentifier("unknown list '" + raw_id + "'");
    if (auto n = advertised_count(id); n && *n != pl.entries.size())
        throw std::logic_error("list " + id + " has " + std::to_string(pl.entries.size()) + " entries");
    return pl;
}

std::vector<Triple> list_triples(const std::string& id) {
    std::vector<Triple> out;
    for (auto& s : load_list(id).entries) out.push_back(triple_of(s));
    return out;
}

std::vector<std::string> witness_table_ids() {
    std::vector<std::string> ids;
    for (auto& r : records("witness_tables"))
        if (std::find(ids.begin(), ids.end(), r[0]) == ids.end()) ids.push_back(r[0]);
    return ids;
}

std::vector<WitnessEntry> load_witness_table(const std::string& id) {
    std::vector<WitnessEntry> out;
    bool found = false;
    for (auto& r : records("witness_tables")) {
        if (r[0] != id) continue;
        found = true;
        if (r.size() != 5) throw std::logic_error("malformed witness record for " + id);
        WitnessEntry base;
        base.table = id;
        base.domain = parse_domain(r[1]);
        base.witness = std::stoll(r[4]);
        if (r[3] == "-") {
            base.terms = parse_terms(r[2]);
            out.push_back(base);
            continue;
        }
        const char var = r[3][0];
        std::istringstream in(r[3].substr(2));
        for (std::string item; std::getline(in, item, ',');) {
            WitnessEntry e = base;
            bool tail = item.ends_with("..");
            int k = std::stoi(tail ? item.substr(0, item.size() - 2) : item);
            e.terms = terms_with_order(r[2], var, k, &e.var_slots);
            e.tail = tail;
            out.push_back(e);
        }
    }
    if (!found) throw UnknownIdentifier("unknown witness table '" + id + "'");
    return out;
}

std::vector<WitnessEntry> all_witness_entries() {
    std::vector<WitnessEntry> out;
    for (auto& id : witness_table_ids()) {
        auto t = load_witness_table(id);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

bool validate_witness(const WitnessEntry& e) {
    if (!e.tail) return !member_with_witness(TripleSum{e.terms, e.domain}, e.witness).has_value();
    if (e.terms.size() != 3) return false;
    EliminationCertificate c;
    c.kind = CertKind::OrderTail;
    c.witnesses = {e.witness};
    for (int s = 0; s < 3; ++s) {
        c.target.coef[s] = {e.terms[s].coef, e.terms[s].coef};
        c.target.order[s] = {e.terms[s].order, e.terms[s].order};
    }
    for (size_t s : e.var_slots) c.target.order[s].hi = kUnbounded;
    return validate_certificate(c, e.domain);
}

static std::vector<CatalogForm> forms_from(std::string_view asset) {
    std::vector<CatalogForm> out;
    for (auto& r : records(asset)) {
        CatalogForm f;
        f.display = r[0];
        auto c = parse_ints(r[1]);
        if (c.size() != 3) throw std::logic_error("bad form record " + r[0]);
        f.coefs = {c[0], c[1], c[2]};
        for (size_t i = 2; i < r.size(); ++i) f.families.families.push_back(parse_family(r[i]));
        out.push_back(f);
    }
    return out;
}

std::vector<CatalogForm> regular_form_catalog() {
    auto v = forms_from("regular_forms");
    if (v.size() != 26) throw std::logic_error("regular form catalog must have 26 entries");
    return v;
}

std::vector<CatalogForm> regular_form_errata() { return forms_from("catalog_errata"); }

CongruenceCondition parse_condition(const std::string& text, size_t* var) {
    // var:modulus:residues[:>=lb]
    std::vector<std::string> parts;
    std::istringstream in(text);
    for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
    if (parts.size() < 3 || parts[0].size() != 1) throw UsageError("bad condition '" + text + "'");
    const std::string vars = "xyz";
    auto pos = vars.find(parts[0][0]);
    if (pos == std::string::npos) throw UsageError("bad condition variable in '" + text + "'");
    *var = pos;
    CongruenceCondition c;
    c.modulus = std::stoll(parts[1]);
    c.residues = parse_ints(parts[2]);
    if (parts.size() > 3) {
        if (!parts[3].starts_with(">=")) throw UsageError("bad lower bound in '" + text + "'");
        c.lower_bound = std::stoll(parts[3].substr(2));
    }
    return c;
}

std::vector<ReductionEntry> explicit_reductions() {
    std::vector<ReductionEntry> out;
    for (auto& r : records("reductions")) {
        ReductionEntry e;
        e.label = r[0];
        e.source = TripleSum{parse_terms(r[2]), parse_domain(r[1])};
        e.M = std::stoll(r[3]);
        e.R = std::stoll(r[4]);
        e.form = DiagonalForm(parse_ints(r[5]));
        for (size_t i = 6; i < r.size(); ++i) {
            if (r[i] == "-") continue;
            size_t v;
            auto c = parse_condition(r[i], &v);
            e.form.with(v, c);
        }
        out.push_back(e);
    }
    return out;
}

std::vector<MappedScanFact> mapped_scan_facts() {
    std::vector<MappedScanFact> out;
    for (auto& r : records("mapped_scans")) {
        MappedScanFact f;
        f.name = r[0];
        f.form = DiagonalForm(parse_ints(r[1]));
        f.M = std::stoll(r[2]);
        f.R = std::stoll(r[3]);
        f.bound = std::stoll(r[4]);
        f.expected = parse_ints(r[5]);
        out.push_back(f);
    }
    return out;
}

std::vector<PrimeFact> prime_facts() {
    std::vector<PrimeFact> out;
    for (auto& r : records("prime_tables")) {
        PrimeFact f;
        f.kind = r[0];
        std::istringstream in(r[1]);
        for (std::string kv; std::getline(in, kv, ',');) {
            auto eq = kv.find('=');
            f.key[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
        }
        const std::string& v = r[2];
        if (v.starts_with("max=")) f.max = std::stoll(v.substr(4));
        else if (f.kind == "N" || f.kind == "s") f.max = std::stoll(v);
        else f.values = parse_ints(v);
        out.push_back(f);
    }
    return out;
}

}  // namespace polysum
