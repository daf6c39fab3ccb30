#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polysum/descent.hpp"
#include "polysum/qform.hpp"

using namespace polysum;

TEST_CASE("realis transform examples and identity") {
    CHECK(realis_transform(1, 1, 1) == std::array<i64, 3>{-3, -3, -3});
    CHECK(realis_transform(1, 0, 0) == std::array<i64, 3>{1, -2, -2});
    CHECK(realis_transform(0, 0, 0) == std::array<i64, 3>{0, 0, 0});
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> d(-100000, 100000);
    for (int i = 0; i < 10000; ++i) {
        i64 x = d(rng), y = d(rng), z = d(rng);
        auto [u, v, w] = realis_transform(x, y, z);
        REQUIRE(u * u + v * v + w * w == 9 * (x * x + y * y + z * z));
    }
}

TEST_CASE("realis transform sign choice avoids the residue 2y+2z") {
    // With 3 not dividing x, one of (x,y,z), (x,-y,-z) gives a first output not congruent to 2y+2z mod 3.
    for (i64 x = 0; x < 3; ++x)
        for (i64 y = 0; y < 3; ++y)
            for (i64 z = 0; z < 3; ++z) {
                if (x == 0) continue;
                bool found = false;
                for (i64 s : {1, -1}) {
                    auto r = realis_transform(x, s * y, s * z);
                    if (floor_mod(r[0] - 2 * s * y - 2 * s * z, 3) != 0) found = true;
                }
                CHECK(found);
            }
}

TEST_CASE("descent_mod3 examples") {
    CHECK(descent_mod3(2, 3, 3) == Pair{5, 1});
    CHECK(descent_mod3(5, 2, 1) == Pair{2, 1});
    auto p = descent_mod3(8, 3, 3);
    CHECK(p.first * p.first + 8 * p.second * p.second == 81);
    CHECK(p.first % 3 != 0);
    CHECK(p == Pair{7, 2});
    CHECK_THROWS_AS(descent_mod3(2, 0, 0), PreconditionError);
    CHECK_THROWS_AS(descent_mod3(3, 1, 1), PreconditionError);
}

TEST_CASE("descent_mod3 postcondition on random inputs") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<i64> d(-3000, 3000);
    for (int i = 0; i < 10000; ++i) {
        int m = std::array<int, 3>{2, 5, 8}[i % 3];
        i64 x = d(rng), y = d(rng);
        i64 s = 1;
        for (int e = static_cast<int>(rng() % 4); e > 0; --e) s *= 3;
        x *= s, y *= s;
        if (x == 0 && y == 0) continue;
        auto [u, v] = descent_mod3(m, x, y);
        REQUIRE(u * u + m * v * v == x * x + m * y * y);
        REQUIRE_FALSE((u % 3 == 0 && v % 3 == 0));
    }
}

TEST_CASE("descent_mod3 agrees with exhaustive search on existence") {
    for (int m : {2, 5, 8})
        for (i64 x = 0; x * x <= 10000; ++x)
            for (i64 y = 0; x * x + m * y * y <= 10000; ++y) {
                if (x == 0 && y == 0) continue;
                i64 w = x * x + m * y * y;
                bool exists = false;
                for (i64 u = 0; u * u <= w && !exists; ++u) {
                    i64 r = w - u * u;
                    if (r % m) continue;
                    i64 v2 = r / m;
                    if (oracle::is_sq(v2)) {
                        i64 v = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(v2))));
                        if (u % 3 || v % 3) exists = true;
                    }
                }
                REQUIRE(exists);
                auto [u, v] = descent_mod3(m, x, y);
                REQUIRE(u * u + m * v * v == w);
            }
}

TEST_CASE("split_3_into_6 examples and property") {
    CHECK(split_3_into_6(5, 2) == Pair{3, 1});
    CHECK(split_3_into_6(1, 1) == Pair{1, 0});
    CHECK(split_3_into_6(1, 2) == Pair{1, 1});
    CHECK_THROWS_AS(split_3_into_6(1, 0), PreconditionError);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<i64> d(-100000, 100000);
    for (int i = 0; i < 10000; ++i) {
        i64 v = d(rng), t = d(rng) / 3;
        i64 u = (i % 2 ? v : -v) + 3 * t;
        auto [x, y] = split_3_into_6(u, v);
        REQUIRE(3 * x * x + 6 * y * y == u * u + 2 * v * v);
    }
}

TEST_CASE("descent_mod5 examples and property") {
    CHECK(descent_mod5(5, 5) == Pair{11, 1});
    CHECK(descent_mod5(1, 1) == Pair{1, 1});
    CHECK(descent_mod5(10, 5) == Pair{14, 1});
    CHECK_THROWS_AS(descent_mod5(0, 0), PreconditionError);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<i64> d(-2000, 2000);
    for (int i = 0; i < 10000; ++i) {
        i64 x = d(rng), y = d(rng), s = 1;
        for (int e = static_cast<int>(rng() % 4); e > 0; --e) s *= 5;
        x *= s, y *= s;
        if (x == 0 && y == 0) continue;
        auto [u, v] = descent_mod5(x, y);
        REQUIRE(u * u + 4 * v * v == x * x + 4 * y * y);
        REQUIRE_FALSE((u % 5 == 0 && v % 5 == 0));
    }
}

TEST_CASE("descent_7_odd examples and property") {
    CHECK(descent_7_odd(1, 1) == Pair{1, 1});
    CHECK(descent_7_odd(2, 2) == Pair{5, 1});
    auto p = descent_7_odd(6, 2);
    CHECK(p.first * p.first + 7 * p.second * p.second == 64);
    CHECK((p.first & 1));
    CHECK((p.second & 1));
    CHECK(p == Pair{1, 3});
    CHECK_THROWS_AS(descent_7_odd(1, 0), PreconditionError);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> d(-3000, 3000);
    int mixed = 0;
    for (int i = 0; i < 10000; ++i) {
        i64 x = d(rng), y = d(rng);
        i64 w = x * x + 7 * y * y;
        i64 s = 1;
        while ((w * s * s) % 8 != 0) s *= 2;
        for (int e = static_cast<int>(rng() % 3); e > 0; --e) s *= 2;
        x *= s, y *= s;
        if (x == 0 && y == 0) continue;
        if ((x / s + y / s) % 2) ++mixed;
        auto [u, v] = descent_7_odd(x, y);
        REQUIRE(u * u + 7 * v * v == x * x + 7 * y * y);
        REQUIRE((u & 1));
        REQUIRE((v & 1));
    }
    CHECK(mixed > 0);
}

TEST_CASE("split_two_n examples and property") {
    auto check = [](i64 n, std::array<i64, 3> r) { return r[0] * r[0] + 9 * r[1] * r[1] + 18 * r[2] * r[2] == 2 * n; };
    CHECK(check(5, split_two_n(5)));
    CHECK(split_two_n(5) == std::array<i64, 3>{1, 1, 0});
    CHECK(split_two_n(2) == std::array<i64, 3>{2, 0, 0});
    CHECK(split_two_n(11) == std::array<i64, 3>{2, 0, 1});
    CHECK_THROWS_AS(split_two_n(3), PreconditionError);
    CHECK_THROWS_AS(split_two_n(23), PreconditionError);
    std::mt19937_64 rng(6);
    int tested = 0;
    while (tested < 10000) {
        i64 n = 3 * static_cast<i64>(rng() % 3000000) + 2;
        if (three_square_excluded(n)) continue;
        ++tested;
        REQUIRE(check(n, split_two_n(n)));
    }
}
