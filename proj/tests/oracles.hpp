#pragma once

// Brute-force reference computations, written without the library's kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using ll = std::int64_t;

// (m-2) * C(x, 2) + x
inline ll poly(ll m, ll x) { return (m - 2) * (x * (x - 1) / 2) + x; }

// Every value c*p_m(x) <= n over the domain (integers when `z`).
inline std::vector<ll> values(ll c, ll m, bool z, ll n) {
    std::set<ll> out;
    for (ll x = 0;; ++x) {
        ll v = c * poly(m, x);
        if (v > n) break;
        out.insert(v);
    }
    if (z)
        for (ll x = -1;; --x) {
            ll v = c * poly(m, x);
            if (v > n) break;
            out.insert(v);
        }
    return {out.begin(), out.end()};
}

struct T {
    ll c, m;
};

// Nested loops over the leading term values; the last term is looked up in its value set.
inline bool represents_in(const std::vector<std::vector<ll>>& vs, ll n, size_t i) {
    if (i + 1 == vs.size()) return std::binary_search(vs[i].begin(), vs[i].end(), n);
    for (ll v : vs[i]) {
        if (v > n) break;
        if (represents_in(vs, n - v, i + 1)) return true;
    }
    return false;
}

inline bool represents(const std::vector<T>& ts, bool z, ll n) {
    std::vector<std::vector<ll>> vs;
    for (auto& t : ts) vs.push_back(values(t.c, t.m, z, n));
    return represents_in(vs, n, 0);
}

inline std::vector<ll> exceptions(const std::vector<T>& ts, bool z, ll bound) {
    std::vector<ll> out;
    for (ll n = 0; n <= bound; ++n)
        if (!represents(ts, z, n)) out.push_back(n);
    return out;
}

// Integer tuples with sum of coef*y^2 == n, filtered by `keep`.
inline ll count_form(const std::vector<ll>& coefs, ll n, const std::function<bool(const std::vector<ll>&)>& keep) {
    ll count = 0;
    std::vector<ll> y(coefs.size());
    std::function<void(size_t, ll)> rec = [&](size_t i, ll rest) {
        if (i == coefs.size()) {
            if (rest == 0 && keep(y)) ++count;
            return;
        }
        for (ll t = 0; coefs[i] * t * t <= rest; ++t)
            for (int sign = 0; sign < (t == 0 ? 1 : 2); ++sign) {
                y[i] = sign ? -t : t;
                rec(i + 1, rest - coefs[i] * t * t);
            }
    };
    rec(0, n);
    return count;
}

inline bool form_represents(const std::vector<ll>& coefs, ll n, const std::function<bool(const std::vector<ll>&)>& keep) {
    return count_form(coefs, n, keep) > 0;
}

inline bool any(const std::vector<ll>&) { return true; }

inline bool is_prime(ll n) {
    if (n < 2) return false;
    for (ll d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_sq(ll n) {
    if (n < 0) return false;
    ll r = static_cast<ll>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

}  // namespace oracle
