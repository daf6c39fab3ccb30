#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "polysum/catalog.hpp"
#include "polysum/screening.hpp"

using namespace polysum;

namespace {

std::vector<oracle::T> to_oracle(const Triple& t) { return {{t[0].coef, t[0].order}, {t[1].coef, t[1].order}, {t[2].coef, t[2].order}}; }

std::vector<Triple> survivor_triples(const ScreenReport& r) {
    std::vector<Triple> out;
    for (auto& s : r.survivors) out.push_back(s.triple);
    return out;
}

// Every concrete triple of the space inside the window is a survivor or covered by a certificate, never both;
// every covering certificate's witnesses are confirmed missed by brute force.
void check_coverage(const CandidateSpace& space, const ScreenReport& rep, i64 max_coef, int max_order, bool brute) {
    std::set<std::string> surv;
    for (auto& s : rep.survivors) surv.insert(format_triple(s.triple));
    bool z = space.domain == Domain::Integers;
    i64 examined = 0;
    for (i64 a = 1; a <= max_coef; ++a)
        for (i64 b = 1; b <= max_coef; ++b)
            for (i64 c = 1; c <= max_coef; ++c)
                for (int i = 3; i <= max_order; ++i)
                    for (int j = 3; j <= max_order; ++j)
                        for (int k = 3; k <= max_order; ++k) {
                            Triple t{Term{a, i}, Term{b, j}, Term{c, k}};
                            if (!space.contains(t)) continue;
                            ++examined;
                            const EliminationCertificate* cover = nullptr;
                            for (auto& e : rep.eliminations)
                                if (e.target.contains(t)) {
                                    cover = &e;
                                    break;
                                }
                            bool survivor = surv.count(format_triple(t)) > 0;
                            REQUIRE_MESSAGE((cover != nullptr) != survivor, format_triple(t));
                            if (cover && brute)
                                for (i64 n : cover->witnesses) REQUIRE_FALSE(oracle::represents(to_oracle(t), z, n));
                        }
    CHECK(examined > 0);
}

}  // namespace

TEST_CASE("order tail cutoff examples") {
    auto a = order_tail_cutoff({Term{1, 3}, Term{1, 3}}, 1, Domain::Naturals, 2000);
    REQUIRE(a);
    CHECK(a->witness == 33);
    CHECK(a->cutoff == 36);
    auto b = order_tail_cutoff({Term{1, 3}, Term{1, 4}}, 1, Domain::Naturals, 2000);
    REQUIRE(b);
    CHECK(b->witness == 34);
    CHECK_FALSE(order_tail_cutoff({Term{1, 3}, Term{1, 3}}, 1, Domain::Naturals, 3));
}

TEST_CASE("order tail certificates hold for every order past the cutoff") {
    auto cut = *order_tail_cutoff({Term{1, 3}, Term{1, 3}}, 1, Domain::Naturals, 2000);
    for (int k = static_cast<int>(cut.cutoff) + 1; k <= 200; ++k)
        CHECK_FALSE(oracle::represents({{1, 3}, {1, 3}, {1, k}}, false, cut.witness));
    EliminationCertificate cert;
    cert.kind = CertKind::OrderTail;
    cert.target.coef = {Range{1, 1}, Range{1, 1}, Range{1, 1}};
    cert.target.order = {Range{3, 3}, Range{3, 3}, Range{cut.cutoff + 1, kUnbounded}};
    cert.witnesses = {cut.witness};
    CHECK(validate_certificate(cert, Domain::Naturals));
    cert.witnesses = {32};
    CHECK_FALSE(validate_certificate(cert, Domain::Naturals));
}

TEST_CASE("coefficient tail cutoff examples") {
    auto a = coefficient_tail_cutoff({Term{1, 5}, Term{1, 5}}, Domain::Integers, 2000);
    REQUIRE(a);
    CHECK(a->witness == 11);
    CHECK(a->cutoff == 11);
    auto b = coefficient_tail_cutoff({Term{1, 3}, Term{1, 3}}, Domain::Naturals, 2000);
    REQUIRE(b);
    CHECK(b->witness == 5);
    CHECK(b->cutoff == 5);
    auto c = coefficient_tail_cutoff({Term{1, 4}, Term{1, 4}}, Domain::Naturals, 2000);
    REQUIRE(c);
    CHECK(c->witness == 3);
}

TEST_CASE("slot values match brute-force unions") {
    for (bool z : {false, true}) {
        Domain d = z ? Domain::Integers : Domain::Naturals;
        for (auto [clo, chi, klo, khi] : std::vector<std::array<i64, 4>>{{1, 1, 3, 9}, {2, 5, 4, 4}, {1, 3, 5, 12}, {3, 3, 7, 7}}) {
            std::set<i64> want;
            for (i64 c = clo; c <= chi; ++c)
                for (i64 k = klo; k <= khi; ++k)
                    for (auto v : oracle::values(c, k, z, 500)) want.insert(v);
            auto got = slot_values({clo, chi}, {klo, khi}, d, 500);
            CHECK(std::set<i64>(got.begin(), got.end()) == want);
        }
        // Unbounded order: values <= n stabilize once k exceeds n.
        std::set<i64> want;
        for (i64 k = 3; k <= 600; ++k)
            for (auto v : oracle::values(2, k, z, 500)) want.insert(v);
        auto got = slot_values({2, 2}, {3, kUnbounded}, d, 500);
        CHECK(std::set<i64>(got.begin(), got.end()) == want);
    }
}

TEST_CASE("liouville preset") {
    auto space = preset_space("liouville");
    auto rep = screen(space, 10000);
    CHECK(compare_with_catalog(survivor_triples(rep), list_triples("liouville-7")).empty());
    for (auto& c : rep.eliminations) CHECK(validate_certificate(c, space.domain));
    check_coverage(space, rep, 20, 3, true);
}

TEST_CASE("same-order preset over the integers") {
    auto space = preset_space("thm-1.1i");
    auto rep = screen(space, 10000);
    CHECK(rep.survivors.size() == 20);
    CHECK(compare_with_catalog(survivor_triples(rep), list_triples("thm-1.1i-20")).empty());
    for (auto& s : rep.survivors) CHECK(s.triple[0].order == 5);
    for (auto& c : rep.eliminations) CHECK(validate_certificate(c, space.domain));
    check_coverage(space, rep, 14, 14, true);
}

TEST_CASE("unit-coefficient preset") {
    auto space = preset_space("thm-1.3");
    auto rep = screen(space, 10000);
    CHECK(compare_with_catalog(survivor_triples(rep), list_triples("thm-1.3-31")).empty());
    for (auto& c : rep.eliminations) CHECK(validate_certificate(c, space.domain));
    check_coverage(space, rep, 1, 45, true);
}

TEST_CASE("weighted preset closes and its window is tiled") {
    auto space = preset_space("thm-1.4");
    auto rep = screen(space, 20000);
    for (auto& c : rep.eliminations) CHECK(validate_certificate(c, space.domain));
    check_coverage(space, rep, 6, 12, false);
    // Raising the bound can only remove survivors.
    auto full = screen(space, 100000);
    auto small = survivor_triples(rep), large = survivor_triples(full);
    for (auto& t : large) CHECK(std::find(small.begin(), small.end(), t) != small.end());
    CHECK(compare_with_catalog(large, list_triples("thm-1.4-64")).empty());
}

TEST_CASE("raising the bound never adds survivors") {
    auto space = preset_space("thm-1.3");
    auto a = survivor_triples(screen(space, 2000));
    auto b = survivor_triples(screen(space, 10000));
    for (auto& t : b) CHECK(std::find(a.begin(), a.end(), t) != a.end());
}

TEST_CASE("unique exception scan") {
    auto got = unique_exception_scan(preset_space("unique-29"), 10000);
    auto find = [&](const std::string& s) -> std::optional<i64> {
        for (auto& [t, n] : got)
            if (format_triple(t) == s) return n;
        return std::nullopt;
    };
    CHECK(find("p_4+p_5+p_8") == 19);
    CHECK(find("p_3+p_5+p_32") == 31);
    i64 mx = 0;
    for (auto& t : list_triples("unique-29")) {
        auto e = find(format_triple(t));
        REQUIRE_MESSAGE(e, format_triple(t));
        mx = std::max(mx, *e);
    }
    CHECK(mx <= 468);
    // One triple beyond the printed 29 also has a single exception up to the bound.
    CHECK(got.size() == 30);
    CHECK(find("p_3+p_5+p_37") == 31);
    CHECK(oracle::exceptions({{1, 3}, {1, 5}, {1, 37}}, false, 3000) == std::vector<oracle::ll>{31});
}

TEST_CASE("mixed triangular and square preset") {
    auto rep = screen(preset_space("mixed-34-list"), 10000);
    auto diff = compare_with_catalog(survivor_triples(rep), list_triples("mixed-34-25"));
    // The printed (p_3,2p_4,4p_4) misses 20; (2p_3,p_4,4p_4) is found in its place.
    REQUIRE(diff.missing.size() == 1);
    REQUIRE(diff.extra.size() == 1);
    CHECK(format_triple(diff.missing[0]) == "p_3+2*p_4+4*p_4");
    CHECK(format_triple(diff.extra[0]) == "2*p_3+p_4+4*p_4");
    CHECK_FALSE(oracle::represents({{1, 3}, {2, 4}, {4, 4}}, false, 20));
}

TEST_CASE("catalog comparison detects a mutation") {
    auto cat = list_triples("thm-1.3-31");
    auto mutated = cat;
    mutated[4][2].order += 1;
    auto d = compare_with_catalog(cat, mutated);
    CHECK(d.missing.size() + d.extra.size() == 2);
    CHECK(compare_with_catalog(cat, cat).empty());
}

TEST_CASE("screen reports unclosable spaces") {
    CHECK_THROWS_AS(screen(preset_space("liouville"), 10000, 3), SpaceNotClosable);
}

TEST_CASE("screen output does not depend on the worker count") {
    auto space = preset_space("thm-1.1i");
    auto a = screen(space, 10000, 2000, 1);
    auto b = screen(space, 10000, 2000, 3);
    CHECK(survivor_triples(a) == survivor_triples(b));
    REQUIRE(a.eliminations.size() == b.eliminations.size());
    for (size_t i = 0; i < a.eliminations.size(); ++i) {
        CHECK(a.eliminations[i].target == b.eliminations[i].target);
        CHECK(a.eliminations[i].witnesses == b.eliminations[i].witnesses);
    }
}
