#include "qhgr/niltl.hpp"

namespace qhgr {

namespace {

NilCoxElem to_nilcox(const NilTLElem& a) { return NilCoxElem{a.n, a.terms}; }

void require_same_rank(const NilTLElem& a, const NilTLElem& b) {
    require(a.n == b.n, "quotient algebra: rank mismatch");
}

}  // namespace

NilTLElem ntl_zero(i64 n) { return NilTLElem{n, {}}; }

NilTLElem ntl_one(i64 n) { return NilTLElem{n, {{AffinePermutation(n), 1}}}; }

NilTLElem ntl_add(const NilTLElem& a, const NilTLElem& b) {
    require_same_rank(a, b);
    NilTLElem out = a;
    for (const auto& [w, c] : b.terms) {
        auto it = out.terms.find(w);
        if (it == out.terms.end()) {
            out.terms.emplace(w, c);
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

NilTLElem ntl_sub(const NilTLElem& a, const NilTLElem& b) { return ntl_add(a, ntl_scale(b, -1)); }

NilTLElem ntl_scale(const NilTLElem& a, i64 c) {
    NilTLElem out{a.n, {}};
    if (c == 0) return out;
    for (const auto& [w, v] : a.terms) out.terms.emplace(w, checked_mul(v, c));
    return out;
}

NilTLElem project(const NilCoxElem& elem) {
    NilTLElem out{elem.n, {}};
    for (const auto& [w, c] : elem.terms)
        if (!supports_braid(w)) out.terms.emplace(w, c);
    return out;
}

NilTLElem ntl_multiply(const NilTLElem& a, const NilTLElem& b) {
    require_same_rank(a, b);
    return project(nc_multiply(to_nilcox(a), to_nilcox(b)));
}

bool verify_eheq(i64 n) {
    require(n >= 2, "verify_eheq: rank at least 2");
    std::vector<NilTLElem> E(n + 1, ntl_zero(n)), H(n + 1, ntl_zero(n));
    E[0] = H[0] = ntl_one(n);
    for (i64 r = 1; r <= n - 1; ++r) {
        E[r] = project(etilde(n, r));
        H[r] = project(htilde(n, r));
    }
    // E[n] and H[n] stay zero: no proper cyclic subset has n elements
    auto coefficient = [&](i64 d) {
        NilTLElem sum = ntl_zero(n);
        for (i64 i = std::max<i64>(0, d - n); i <= std::min<i64>(d, n); ++i) {
            i64 j = d - i;
            NilTLElem term = ntl_multiply(E[i], H[j]);
            sum = ntl_add(sum, ntl_scale(term, j % 2 == 0 ? 1 : -1));
        }
        return sum;
    };
    for (i64 d = 1; d <= n - 1; ++d)
        if (!(coefficient(d) == ntl_zero(n))) return false;
    NilTLElem expected = ntl_zero(n);
    for (i64 m = 1; m <= n - 1; ++m)
        expected = ntl_add(expected, ntl_scale(ntl_multiply(E[m], H[n - m]),
                                               (n - m) % 2 == 0 ? 1 : -1));
    return coefficient(n) == expected;
}

GeneratorReport postnikov_generator_check(i64 m, i64 n) {
    PetersonContext ctx(m, n);
    auto composite = [&](const NilCoxElem& x) {
        return dual_transpose(strange_duality(psi(ctx, x)));
    };
    auto declared_h = [&](i64 r) {
        return r <= m ? qc_class(n - m, n, {r}) : qc_zero(n - m, n);
    };
    auto declared_e = [&](i64 r) {
        return r <= n - m ? qc_class(n - m, n, Partition(r, 1)) : qc_zero(n - m, n);
    };
    GeneratorReport rep;
    for (i64 r = 1; r <= n - 1; ++r) {
        NilCoxElem h = htilde(n, r);
        bool ok = project(h).terms.size() == h.terms.size() && composite(h) == declared_h(r);
        rep.entries.push_back({"h" + std::to_string(r), ok});
    }
    for (i64 r = 1; r <= n - 1; ++r) {
        NilCoxElem e = etilde(n, r);
        bool ok = project(e).terms.size() == e.terms.size() && composite(e) == declared_e(r);
        rep.entries.push_back({"e" + std::to_string(r), ok});
    }
    rep.entries.push_back({"z", composite(nc_multiply(etilde(n, n - m), htilde(n, m))) ==
                                    qc_class(n - m, n, {}, 1)});
    for (i64 r = 1; r <= n - 1; ++r)
        for (i64 s = r; s <= n - 1; ++s)
            rep.entries.push_back(
                {"h" + std::to_string(r) + "*h" + std::to_string(s),
                 composite(nc_multiply(htilde(n, r), htilde(n, s))) ==
                     qproduct(declared_h(r), declared_h(s))});
    for (i64 r = 1; r <= n - 1; ++r)
        for (i64 s = r; s <= n - 1; ++s)
            rep.entries.push_back(
                {"e" + std::to_string(r) + "*e" + std::to_string(s),
                 composite(nc_multiply(etilde(n, r), etilde(n, s))) ==
                     qproduct(declared_e(r), declared_e(s))});
    for (i64 r = 1; r <= n - 1; ++r)
        for (i64 s = 1; s <= n - 1; ++s)
            rep.entries.push_back(
                {"e" + std::to_string(r) + "*h" + std::to_string(s),
                 composite(nc_multiply(etilde(n, r), htilde(n, s))) ==
                     qproduct(declared_e(r), declared_h(s))});
    return rep;
}

}  // namespace qhgr
