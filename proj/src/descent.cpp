#include "polysum/descent.hpp"

#include <cstdlib>
#include <string>

#include "polysum/qform.hpp"

namespace polysum {

std::array<i64, 3> realis_transform(i64 x, i64 y, i64 z) {
    auto f = [](i64 a, i64 b, i64 c) { return checked_sub(checked_sub(a, checked_mul(2, b)), checked_mul(2, c)); };
    return {f(x, y, z), f(y, x, z), f(z, x, y)};
}

static i64 value2(i64 x, i64 m, i64 y) { return narrow(static_cast<i128>(x) * x + static_cast<i128>(m) * y * y); }

static Pair absolute(Pair p) { return {std::llabs(p.first), std::llabs(p.second)}; }

Pair descent_mod3(int m, i64 x, i64 y) {
    if (m != 2 && m != 5 && m != 8) throw PreconditionError("descent_mod3 needs m in {2,5,8}");
    if (value2(x, m, y) == 0) throw PreconditionError("zero input");
    int k = 0;
    while (x % 3 == 0 && y % 3 == 0) {
        x /= 3;
        y /= 3;
        ++k;
    }
    // 9(a^2 + m b^2) = c^2 + m d^2, lower sign first.
    auto step = [m](i64 a, i64 b, int sign) -> Pair {
        switch (m) {
            case 2: return {a - sign * 4 * b, 2 * a + sign * b};
            case 5: return {2 * a - sign * 5 * b, a + sign * 2 * b};
            default: return {a - sign * 8 * b, a + sign * b};
        }
    };
    for (; k > 0; --k) {
        Pair p = step(x, y, 1);
        if (p.first % 3 == 0 && p.second % 3 == 0) p = step(x, y, -1);
        x = p.first;
        y = p.second;
    }
    return absolute({x, y});
}

Pair split_3_into_6(i64 u, i64 v) {
    i64 w = value2(u, 2, v);
    if (w % 3) throw PreconditionError("split_3_into_6 needs 3 | u^2 + 2v^2");
    if (floor_mod(u - v, 3) != 0) v = -v;
    return absolute({(u + 2 * v) / 3, (u - v) / 3});
}

Pair descent_mod5(i64 x, i64 y) {
    if (value2(x, 4, y) == 0) throw PreconditionError("zero input");
    int k = 0;
    while (x % 5 == 0 && y % 5 == 0) {
        x /= 5;
        y /= 5;
        ++k;
    }
    // 5(a^2 + 4b^2) = (a -+ 4b)^2 + 4(a +- b)^2, applied twice per stripped 5.
    for (int s = 0; s < 2 * k; ++s) {
        Pair p{x - 4 * y, x + y};
        if (p.first % 5 == 0 && p.second % 5 == 0) p = {x + 4 * y, x - y};
        x = p.first;
        y = p.second;
    }
    return absolute({x, y});
}

Pair descent_7_odd(i64 x, i64 y) {
    i64 w = value2(x, 7, y);
    if (w == 0 || w % 8) throw PreconditionError("descent_7_odd needs 8 | x^2 + 7y^2 > 0");
    int k = 0;
    while (x % 2 == 0 && y % 2 == 0) {
        x /= 2;
        y /= 2;
        ++k;
    }
    if ((x & 1) != (y & 1)) {
        // 16(x^2 + 7y^2) = (3x + 7y)^2 + 7(x - 3y)^2
        if (k < 2) throw PreconditionError("descent_7_odd: inconsistent input");
        i64 s = 3 * x + 7 * y, t = x - 3 * y;
        x = s;
        y = t;
        k -= 2;
    }
    for (; k > 0; --k) {
        if (floor_mod(x - y, 4) != 0) y = -y;
        i64 s = (3 * x + 7 * y) / 2, t = (x - 3 * y) / 2;
        x = s;
        y = t;
    }
    return absolute({x, y});
}

std::array<i64, 3> split_two_n(i64 n) {
    if (n < 0 || n % 3 != 2 || three_square_excluded(n))
        throw PreconditionError("split_two_n needs n = 2 mod 3 and n not of the form 4^k(8l+7)");
    for (i64 w = 0; w * w <= n; w += 3) {
        i64 rest = n - w * w;
        for (i64 u = 0; 2 * u * u <= rest; ++u) {
            i64 v;
            if (!is_square(rest - u * u, &v)) continue;
            i64 p = u + v, q = u - v;
            if (p % 3 == 0) std::swap(p, q);
            return {std::llabs(p), std::llabs(q / 3), w / 3};
        }
    }
    throw std::logic_error("split_two_n: no three-square representation found for " + std::to_string(n));
}

}  // namespace polysum
