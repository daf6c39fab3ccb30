#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polysum/polycore.hpp"

using namespace polysum;

TEST_CASE("poly_value matches the binomial form and the square completion for small orders and arguments") {
    for (int m = 3; m <= 60; ++m) {
        auto sc = square_completion(m);
        for (i64 x = -200; x <= 200; ++x) {
            i64 v = poly_value(m, x);
            CHECK(v == oracle::poly(m, x));
            CHECK(v >= 0);
            i64 w = sc.step * x - sc.residue;
            CHECK(sc.stretch * v + sc.offset == w * w);
        }
        CHECK(poly_value(m, 0) == 0);
        CHECK(poly_value(m, 1) == 1);
        CHECK(poly_value(m, 2) == m);
        CHECK(poly_value(m, 3) == 3 * m - 3);
        CHECK(poly_value(m, 4) == 6 * m - 8);
        CHECK(poly_value(m, -1) == m - 3);
        CHECK(poly_value(m, -2) == 3 * m - 8);
    }
}

TEST_CASE("poly_value examples") {
    CHECK(poly_value(5, -1) == 2);
    CHECK(poly_value(4, 0) == 0);
    CHECK(poly_value(9, -2) == 19);
}

TEST_CASE("poly_value reports overflow instead of wrapping") {
    CHECK_THROWS_AS(poly_value(60, 3'000'000'000LL), OverflowError);
    CHECK_THROWS_AS(poly_value(3, -5'000'000'000LL), OverflowError);
}

TEST_CASE("generalized pentagonal values") {
    auto v = poly_values_upto({1, 5}, Domain::Integers, 40);
    CHECK(v == std::vector<i64>{0, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40});
}

TEST_CASE("poly_values_upto examples") {
    CHECK(poly_values_upto({1, 6}, Domain::Integers, 10) == std::vector<i64>{0, 1, 3, 6, 10});
    CHECK(poly_values_upto({2, 3}, Domain::Naturals, 12) == std::vector<i64>{0, 2, 6, 12});
    CHECK(poly_values_upto({1, 5}, Domain::Naturals, 12) == std::vector<i64>{0, 1, 5, 12});
}

TEST_CASE("poly_values_upto agrees with direct enumeration") {
    for (int m = 3; m <= 30; ++m)
        for (i64 c : {1, 2, 3, 7})
            for (bool z : {false, true}) {
                auto got = poly_values_upto({c, m}, z ? Domain::Integers : Domain::Naturals, 3000);
                auto want = oracle::values(c, m, z, 3000);
                CHECK(got == std::vector<i64>(want.begin(), want.end()));
            }
}

TEST_CASE("integer stream order is 0, 1, -1, 2, -2") {
    auto s = poly_stream({1, 5}, Domain::Integers, 20);
    REQUIRE(s.size() >= 5);
    CHECK(s[0].first == 0);
    CHECK(s[1].first == 1);
    CHECK(s[2].first == -1);
    CHECK(s[3].first == 2);
    CHECK(s[4].first == -2);
    for (auto& [x, v] : s) CHECK(v == poly_value(5, x));
}

TEST_CASE("is_generalized_polygonal examples") {
    auto a = is_generalized_polygonal(5, 7);
    REQUIRE(a);
    CHECK(*a == -2);
    CHECK_FALSE(is_generalized_polygonal(4, 2));
    auto b = is_generalized_polygonal(8, 5);
    REQUIRE(b);
    CHECK(*b == -1);
    CHECK_FALSE(is_generalized_polygonal(5, 7, Domain::Naturals));
    CHECK(is_generalized_polygonal(5, 12, Domain::Naturals) == 3);
}

TEST_CASE("membership test round-trips and matches enumeration") {
    for (int m = 3; m <= 20; ++m) {
        for (bool z : {false, true}) {
            Domain d = z ? Domain::Integers : Domain::Naturals;
            auto vals = oracle::values(1, m, z, 5000);
            std::set<i64> in(vals.begin(), vals.end());
            for (i64 n = 0; n <= 5000; ++n) {
                auto x = is_generalized_polygonal(m, n, d);
                CHECK(x.has_value() == in.count(n) > 0);
                if (x) {
                    CHECK(poly_value(m, *x) == n);
                    if (!z) CHECK(*x >= 0);
                }
            }
        }
    }
}

TEST_CASE("hexagonal and triangular numbers agree over the integers") {
    for (i64 n = 0; n <= 100000; ++n)
        REQUIRE(is_generalized_polygonal(6, n).has_value() == is_generalized_polygonal(3, n).has_value());
}

TEST_CASE("square completion examples") {
    auto p = square_completion(5);
    CHECK(p.stretch == 24);
    CHECK(p.offset == 1);
    CHECK(p.step == 6);
    CHECK(p.residue == 1);
    auto q = square_completion(4);
    CHECK(q.stretch == 16);
    CHECK(q.offset == 0);
    CHECK(q.step == 4);
    CHECK(q.residue == 0);
    auto r = square_completion(9);
    CHECK(r.stretch == 56);
    CHECK(r.offset == 25);
    CHECK(r.step == 14);
    CHECK(r.residue == 5);
}

TEST_CASE("second_value is the smallest stream value above one") {
    for (int m = 3; m <= 40; ++m)
        for (bool z : {false, true}) {
            auto v = oracle::values(1, m, z, 200);
            i64 want = 0;
            for (auto x : v)
                if (x > 1) {
                    want = x;
                    break;
                }
            CHECK(second_value(m, z ? Domain::Integers : Domain::Naturals) == want);
        }
}

TEST_CASE("term parsing and formatting") {
    auto ts = parse_terms("p4+p_5+2*p_8+3p_3");
    REQUIRE(ts.size() == 4);
    CHECK(ts[0] == Term{1, 4});
    CHECK(ts[1] == Term{1, 5});
    CHECK(ts[2] == Term{2, 8});
    CHECK(ts[3] == Term{3, 3});
    CHECK(format_terms(ts) == "p_4+p_5+2*p_8+3*p_3");
    CHECK_THROWS(parse_terms("p_2"));
    CHECK_THROWS(parse_terms("0*p_3"));
    CHECK_THROWS(parse_terms("p_3++p_4"));
    CHECK_THROWS(parse_terms("q_3"));
    CHECK(parse_domain("N") == Domain::Naturals);
    CHECK(parse_domain("Z") == Domain::Integers);
    CHECK_THROWS(parse_domain("Q"));
}
