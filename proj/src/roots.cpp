#include "qhgr/roots.hpp"

#include <algorithm>

namespace qhgr {

bool is_positive(const AffineRoot& a) { return a.p > 0 || (a.p == 0 && a.i < a.j); }

AffineRoot simple_root(i64 n, i64 t) {
    require(t >= 0 && t < n, "simple root index out of range");
    if (t == 0) return {n, 1, 1};
    return {t, t + 1, 0};
}

AffineRoot highest_root(i64 n) {
    require(n >= 2, "rank must be at least 2");
    return {1, n, 0};
}

AffineRoot bar(const AffineRoot& a) { return {a.i, a.j, 0}; }

std::vector<i64> simple_coefficients(i64 n, const AffineRoot& a) {
    require(a.i >= 1 && a.i <= n && a.j >= 1 && a.j <= n && a.i != a.j, "bad root indices");
    std::vector<i64> c(n, 0);
    i64 lo = std::min(a.i, a.j), hi = std::max(a.i, a.j), sign = a.i < a.j ? 1 : -1;
    for (i64 t = lo; t < hi; ++t) c[t - 1] = sign;
    c[n - 1] = a.p;
    return c;
}

namespace {

// w = v * t_lambda with v a window permutation of [1,n].
struct VTDecomp {
    std::vector<i64> v, lambda;
};

VTDecomp decompose(const AffinePermutation& w) {
    i64 n = w.rank();
    VTDecomp d;
    d.v.resize(n);
    d.lambda.resize(n);
    for (i64 i = 1; i <= n; ++i) {
        i64 wi = w(i);
        d.v[i - 1] = pos_mod(wi - 1, n) + 1;
        d.lambda[i - 1] = floor_div(wi - d.v[i - 1], n);
    }
    return d;
}

}  // namespace

AffineRoot act(const AffinePermutation& w, const AffineRoot& beta) {
    i64 n = w.rank();
    require(beta.i >= 1 && beta.i <= n && beta.j >= 1 && beta.j <= n && beta.i != beta.j,
            "root indices out of range");
    auto d = decompose(w);
    // t_lambda fixes e_i - e_j and shifts the delta part by <lambda, e_j - e_i>.
    return {d.v[beta.i - 1], d.v[beta.j - 1],
            checked_add(beta.p, d.lambda[beta.j - 1] - d.lambda[beta.i - 1])};
}

std::vector<AffineRoot> inversions(const AffinePermutation& w) {
    i64 n = w.rank();
    auto d = decompose(w);
    std::vector<AffineRoot> out;
    for (i64 i = 1; i <= n; ++i)
        for (i64 j = 1; j <= n; ++j) {
            if (i == j) continue;
            i64 q = d.lambda[j - 1] - d.lambda[i - 1];
            // Positive roots on the pair: p >= (i<j ? 0 : 1); image delta part
            // is p + q, negative once p + q < 0 or ties broken by the window.
            i64 p0 = i < j ? 0 : 1;
            for (i64 p = p0; p + q < 0; ++p) out.push_back({i, j, p});
            if (-q >= p0 && d.v[i - 1] > d.v[j - 1]) out.push_back({i, j, -q});
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_in_SnP(const AffinePermutation& w, i64 m) {
    i64 n = w.rank();
    require(m >= 1 && m < n, "cut position must satisfy 1 <= m <= n-1");
    auto d = decompose(w);
    auto ok_pair = [&](i64 i, i64 j) {
        i64 q = d.lambda[j - 1] - d.lambda[i - 1];
        if (q == 0) return d.v[i - 1] < d.v[j - 1];
        if (q == 1) return d.v[i - 1] > d.v[j - 1];
        return false;
    };
    for (i64 i = 1; i <= m; ++i)
        for (i64 j = i + 1; j <= m; ++j)
            if (!ok_pair(i, j)) return false;
    for (i64 i = m + 1; i <= n; ++i)
        for (i64 j = i + 1; j <= n; ++j)
            if (!ok_pair(i, j)) return false;
    return true;
}

bool supports_braid(const AffinePermutation& w) {
    i64 n = w.rank();
    i64 spread = 0;
    for (i64 i = 1; i <= n; ++i) spread = std::max(spread, w(i) > i ? w(i) - i : i - w(i));
    i64 radius = checked_mul(n, checked_add(spread, 1));
    // A 321 pattern can be shifted so its middle index sits in [1,n]; the
    // outer witnesses then live within the radius.
    for (i64 j = 1; j <= n; ++j) {
        i64 wj = w(j);
        i64 left_max = wj;
        for (i64 i = j - 1; i >= j - radius; --i) left_max = std::max(left_max, w(i));
        if (left_max <= wj) continue;
        i64 right_min = wj;
        for (i64 k = j + 1; k <= j + radius; ++k) right_min = std::min(right_min, w(k));
        if (right_min < wj) return true;
    }
    return false;
}

bool is_dominant(const std::vector<i64>& lambda) {
    return std::is_sorted(lambda.begin(), lambda.end(), std::greater<i64>());
}

bool is_antidominant(const std::vector<i64>& lambda) {
    return std::is_sorted(lambda.begin(), lambda.end());
}

}  // namespace qhgr
