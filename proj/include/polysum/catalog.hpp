#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/qform.hpp"
#include "polysum/screening.hpp"

namespace polysum {

// Raw text of an embedded asset (file name under data/ without extension).
std::string_view asset_text(std::string_view name);
std::vector<std::string> asset_names();

struct TripleList {
    std::string id;
    std::vector<TripleSum> entries;
};

struct UnknownIdentifier : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> list_ids();
// Cardinality is checked against a trailing "-<count>" in the identifier.
TripleList load_list(const std::string& id);
std::vector<Triple> list_triples(const std::string& id);

// One transcribed witness record: the sum with one variable order resolved, or an open order tail.
struct WitnessEntry {
    std::string table;
    Domain domain = Domain::Naturals;
    std::vector<Term> terms;       // variable slots hold the concrete order, or tail_from for tails
    std::vector<size_t> var_slots; // slots sharing the variable order
    bool tail = false;             // true: every order >= terms[var_slots[0]].order
    i64 witness = 0;
};

std::vector<std::string> witness_table_ids();
std::vector<WitnessEntry> load_witness_table(const std::string& id);
std::vector<WitnessEntry> all_witness_entries();
// Validates the record: direct non-membership, or a box certificate over the order tail.
bool validate_witness(const WitnessEntry& e);

std::vector<CatalogForm> regular_form_catalog();
std::vector<CatalogForm> regular_form_errata();

std::vector<ReductionEntry> explicit_reductions();
CongruenceCondition parse_condition(const std::string& text, size_t* var);

struct MappedScanFact {
    std::string name;
    DiagonalForm form;
    i64 M = 1, R = 0, bound = 0;
    std::vector<i64> expected;
};
std::vector<MappedScanFact> mapped_scan_facts();

struct PrimeFact {
    std::string kind;               // S, N, s, conj-1.7
    std::map<std::string, i64> key; // a, m, q, r
    std::vector<i64> values;        // S-set or exception list
    std::optional<i64> max;         // N, s, thresholds
};
std::vector<PrimeFact> prime_facts();

}  // namespace polysum
