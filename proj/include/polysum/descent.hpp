#pragma once

#include <array>
#include <utility>

#include "polysum/arith.hpp"

namespace polysum {

using Pair = std::pair<i64, i64>;

// (x-2y-2z, y-2x-2z, z-2x-2y); squares sum to 9(x^2+y^2+z^2).
std::array<i64, 3> realis_transform(i64 x, i64 y, i64 z);

// u^2 + m v^2 = x^2 + m y^2 with u, v not both divisible by 3. m in {2, 5, 8}.
Pair descent_mod3(int m, i64 x, i64 y);

// 3x^2 + 6y^2 = u^2 + 2v^2 (requires 3 | u^2 + 2v^2).
Pair split_3_into_6(i64 u, i64 v);

// u^2 + 4v^2 = x^2 + 4y^2 with u, v not both divisible by 5.
Pair descent_mod5(i64 x, i64 y);

// u^2 + 7v^2 = x^2 + 7y^2 with u, v odd (requires 8 | x^2 + 7y^2).
Pair descent_7_odd(i64 x, i64 y);

// 2n = x^2 + 9y^2 + 18z^2 for n = 2 mod 3 not of the form 4^k(8l+7).
std::array<i64, 3> split_two_n(i64 n);

}  // namespace polysum
