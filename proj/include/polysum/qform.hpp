#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polysum/arith.hpp"
#include "polysum/polycore.hpp"

namespace polysum {

// Variable restriction: y mod modulus in residues (empty residues = any), and y >= lower_bound if set.
struct CongruenceCondition {
    i64 modulus = 1;
    std::vector<i64> residues;
    std::optional<i64> lower_bound;

    bool allows(i64 y) const;
    // Some sign of |y| is allowed.
    bool allows_abs(i64 t) const { return allows(t) || allows(-t); }
    static CongruenceCondition plus_minus(i64 r, i64 q);
    friend bool operator==(const CongruenceCondition&, const CongruenceCondition&) = default;
};

// sum of coefs[i] * y_i^2 with optional per-variable conditions. Two or three variables.
struct DiagonalForm {
    std::vector<i64> coefs;
    std::vector<std::optional<CongruenceCondition>> conds;

    DiagonalForm() = default;
    DiagonalForm(std::vector<i64> c);
    DiagonalForm(i64 a, i64 b, i64 c) : DiagonalForm(std::vector<i64>{a, b, c}) {}
    DiagonalForm& with(size_t var, CongruenceCondition c);
    size_t size() const { return coefs.size(); }
    bool allows(size_t var, i64 y) const { return !conds[var] || conds[var]->allows(y); }
    bool allows_abs(size_t var, i64 t) const { return !conds[var] || conds[var]->allows_abs(t); }
    bool conditioned() const;
    i64 eval(const std::vector<i64>& y) const;
    friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;
};

std::string format_form(const DiagonalForm& f);

std::optional<std::vector<i64>> qf_represents(const DiagonalForm& f, i64 n);

// Values coef*t^2 <= bound, t >= 0, where t or -t satisfies the condition.
std::vector<i64> form_value_set(const DiagonalForm& f, size_t var, i64 bound);

std::vector<i64> qf_exception_set(const DiagonalForm& f, i64 bound, unsigned workers = 0);

// {n <= bound : M*n + R not represented}.
std::vector<i64> mapped_exception_scan(const DiagonalForm& f, i64 M, i64 R, i64 bound, unsigned workers = 0);

bool three_square_excluded(i64 n);

// {s * t^k * (q*l + r) : k, l >= 0}; t == 1 means k = 0 only.
struct Family {
    i64 s = 1, t = 1, q = 1, r = 0;
    bool contains(i64 n) const;
    friend bool operator==(const Family&, const Family&) = default;
};

struct FamilySet {
    std::vector<Family> families;
    bool contains(i64 n) const;
};

std::vector<i64> family_enumerate(const FamilySet& fs, i64 bound);
std::string format_family(const Family& f);
Family parse_family(const std::string& s);

struct CatalogForm {
    std::string display;
    std::array<i64, 3> coefs{};
    FamilySet families;
};

struct CatalogDiff {
    bool equal = true;
    std::vector<i64> unlisted_exceptions;  // not represented but outside every family
    std::vector<i64> listed_but_represented;
};

CatalogDiff verify_catalog_form(const CatalogForm& entry, i64 bound, unsigned workers = 0);

struct ReductionEntry {
    std::string label;
    TripleSum source;
    i64 M = 1;
    i64 R = 0;
    DiagonalForm form;
};

// Square completion over the lcm multiplier; self-checked for n <= 500.
ReductionEntry canonical_reduction(const TripleSum& sum);

struct ReductionCheck {
    bool holds = true;
    std::optional<i64> counterexample;
};

ReductionCheck verify_reduction(const ReductionEntry& e, i64 bound, unsigned workers = 0);

// Constraint on one variable: y_var mod modulus == residue.
struct VarConstraint {
    size_t var = 0;
    i64 modulus = 1;
    i64 residue = 0;
};

// Exact count of integer tuples (signs included) representing n and satisfying the constraint.
i64 rep_count_constrained(const DiagonalForm& f, i64 n, std::optional<VarConstraint> c = std::nullopt);

}  // namespace polysum
