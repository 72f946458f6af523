#include "qhgr/quantum.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qhgr {

namespace {

void add_term(QClass& out, i64 d, const Partition& shape, i64 c) {
    if (c == 0) return;
    auto key = std::make_pair(d, shape);
    auto it = out.terms.find(key);
    if (it == out.terms.end()) {
        out.terms.emplace(std::move(key), c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) out.terms.erase(it);
}

bool qc_nonneg(const QClass& a) {
    for (const auto& [key, c] : a.terms)
        if (c < 0) return false;
    return true;
}

// Extensions of lam by exactly `budget` boxes, no two in a column, first part
// at most maxw.  At most one new row can appear and it takes what is left.
void strip_extensions(const Partition& lam, i64 row, i64 upper, i64 budget,
                      Partition& cur, std::vector<Partition>& out) {
    i64 lo = partition_part(lam, row + 1);
    if (lo == 0) {
        if (budget <= upper) {
            if (budget > 0) cur.push_back(budget);
            out.push_back(cur);
            if (budget > 0) cur.pop_back();
        }
        return;
    }
    for (i64 v = lo; v <= upper && v - lo <= budget; ++v) {
        cur.push_back(v);
        strip_extensions(lam, row + 1, lo, budget - (v - lo), cur, out);
        cur.pop_back();
    }
}

// sigma_(r) * x, extended linearly over the terms of x.
QClass qpieri_class(i64 r, const QClass& x) {
    QClass out{x.m, x.n, {}};
    for (const auto& [key, c] : x.terms) {
        QClass piece = qpieri(x.m, x.n, r, key.second);
        for (const auto& [pk, pc] : piece.terms)
            add_term(out, checked_add(key.first, pk.first), pk.second, checked_mul(c, pc));
    }
    return out;
}

// sigma_lam * b through the h-determinant expansion of sigma_lam: every
// permutation contributes a signed chain of single-row Pieri steps.
QClass giambelli_times(i64 m, i64 n, const Partition& lam, const QClass& b) {
    if (lam.empty()) return b;
    i64 ell = static_cast<i64>(lam.size());
    std::vector<i64> perm(ell);
    std::iota(perm.begin(), perm.end(), 0);
    QClass acc = qc_zero(m, n);
    do {
        i64 sign = 1;
        for (i64 i = 0; i < ell; ++i)
            for (i64 j = i + 1; j < ell; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<i64> rows;
        bool ok = true;
        for (i64 i = 0; i < ell && ok; ++i) {
            i64 p = lam[i] + perm[i] - i;
            if (p < 0 || p > n - m)
                ok = false;
            else if (p > 0)
                rows.push_back(p);
        }
        if (!ok) continue;
        QClass term = b;
        for (i64 p : rows) term = qpieri_class(p, term);
        acc = qc_add(acc, qc_scale(term, sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

void require_same_box(const QClass& a, const QClass& b, const char* what) {
    if (a.m != b.m || a.n != b.n) fail(what);
}

}  // namespace

QClass qc_zero(i64 m, i64 n) {
    require(m >= 1 && m < n, "class algebra: need 1 <= m < n");
    return QClass{m, n, {}};
}

QClass qc_class(i64 m, i64 n, const Partition& shape, i64 qdeg, i64 coeff) {
    QClass out = qc_zero(m, n);
    require_partition(shape);
    require(fits_in_box(shape, m, n - m), "class algebra: shape outside box");
    add_term(out, qdeg, shape, coeff);
    return out;
}

QClass qc_add(const QClass& a, const QClass& b) {
    require_same_box(a, b, "class algebra: mismatched Grassmannians");
    QClass out = a;
    for (const auto& [key, c] : b.terms) add_term(out, key.first, key.second, c);
    return out;
}

QClass qc_sub(const QClass& a, const QClass& b) { return qc_add(a, qc_scale(b, -1)); }

QClass qc_scale(const QClass& a, i64 c) {
    QClass out{a.m, a.n, {}};
    if (c == 0) return out;
    for (const auto& [key, v] : a.terms) out.terms.emplace(key, checked_mul(v, c));
    return out;
}

QClass qc_shift(const QClass& a, i64 d) {
    QClass out{a.m, a.n, {}};
    for (const auto& [key, v] : a.terms)
        out.terms.emplace(std::make_pair(checked_add(key.first, d), key.second), v);
    return out;
}

bool qc_is_zero(const QClass& a) { return a.terms.empty(); }

QClass qpieri(i64 m, i64 n, i64 r, const Partition& lam) {
    require(m >= 1 && m < n, "qpieri: need 1 <= m < n");
    require(r >= 1 && r <= n - m, "qpieri: row length out of range");
    require_partition(lam);
    require(fits_in_box(lam, m, n - m), "qpieri: shape outside box");
    QClass out{m, n, {}};
    std::vector<Partition> mus;
    Partition cur;
    strip_extensions(lam, 0, n - m, r, cur, mus);
    for (const Partition& mu : mus) {
        if (fits_in_box(mu, m, n - m)) {
            add_term(out, 0, mu, 1);
        } else {
            // exactly m+1 rows; only the corner box can carry a length-n hook
            for (const RimHookRemoval& rem : rim_hook_removals(n, mu))
                if (fits_in_box(rem.shape, m, n - m)) add_term(out, 1, rem.shape, 1);
        }
    }
    return out;
}

QClass qproduct(const QClass& a, const QClass& b) {
    require_same_box(a, b, "qproduct: mismatched Grassmannians");
    QClass acc = qc_zero(a.m, a.n);
    for (const auto& [key, c] : a.terms) {
        QClass piece = giambelli_times(a.m, a.n, key.second, b);
        acc = qc_add(acc, qc_shift(qc_scale(piece, c), key.first));
    }
    if (qc_nonneg(a) && qc_nonneg(b))
        for (const auto& [key, c] : acc.terms)
            require(c > 0, "qproduct: negative structure constant");
    return acc;
}

QClass qproduct(i64 m, i64 n, const Partition& lam, const Partition& mu) {
    return qproduct(qc_class(m, n, lam), qc_class(m, n, mu));
}

QClass dual_transpose(const QClass& a) {
    QClass out = qc_zero(a.n - a.m, a.n);
    for (const auto& [key, c] : a.terms)
        add_term(out, key.first, transpose_shape(a.m, a.n, key.second), c);
    return out;
}

QClass dual_complement(const QClass& a) {
    QClass out = qc_zero(a.m, a.n);
    for (const auto& [key, c] : a.terms)
        add_term(out, key.first, complement_shape(a.m, a.n, key.second), c);
    return out;
}

QClass strange_duality(const QClass& a) {
    QClass out = qc_zero(a.m, a.n);
    for (const auto& [key, c] : a.terms) {
        StrangeDual sd = strange_dual(a.m, a.n, key.second);
        add_term(out, -key.first - sd.diag, sd.shape, c);
    }
    return out;
}

}  // namespace qhgr
