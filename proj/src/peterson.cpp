#include "qhgr/peterson.hpp"

#include "json.hpp"

namespace qhgr {

namespace {

using nlohmann::json;

AffinePermutation checked_u(i64 m, i64 n) {
    require(m >= 1 && m < n, "peterson: need 1 <= m < n");
    return u_element(n, m);
}

json shape_json(const Partition& p) { return json(p); }

json class_json(const QClass& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms)
        terms.push_back({{"shape", shape_json(key.second)}, {"qdeg", key.first}, {"coeff", c}});
    return terms;
}

// psi with optional stage recording; trace may be null.
QClass psi_stages(const PetersonContext& ctx, const NilCoxElem& elem,
                  std::vector<std::string>* trace) {
    require(elem.n == ctx.n, "psi: rank mismatch");
    QClass out = qc_zero(ctx.m, ctx.n);
    if (elem.terms.empty()) return out;
    i64 grade = length(elem.terms.begin()->first);
    for (const auto& [w, c] : elem.terms)
        require(length(w) == grade, "psi: input not length-homogeneous");

    auto jcoeffs = j_expand(elem);
    if (trace) {
        json rec = {{"stage", "j_expansion"}, {"coefficients", json::array()}};
        for (const auto& [w, c] : jcoeffs)
            rec["coefficients"].push_back({{"window", w.window()}, {"coeff", c}});
        trace->push_back(rec.dump());
    }

    json dropped = json::array();
    json factored = json::array();
    for (const auto& [w, c] : jcoeffs) {
        if (!is_in_SnP(w, ctx.m)) {
            if (trace) dropped.push_back({{"window", w.window()}, {"coeff", c}});
            continue;
        }
        VURFactorization f = factor_vur(w, ctx.m);
        Partition shape = perm_to_shape(ctx.m, ctx.n, f.v);
        if (trace)
            factored.push_back({{"window", w.window()},
                                {"shape", shape_json(shape)},
                                {"r", f.r},
                                {"coeff", c}});
        out = qc_add(out, qc_class(ctx.m, ctx.n, shape, -f.r, c));
    }
    if (trace) {
        trace->push_back(json{{"stage", "coset_filter"}, {"dropped", dropped}}.dump());
        trace->push_back(json{{"stage", "factorization"}, {"terms", factored}}.dump());
    }
    return out;
}

}  // namespace

PetersonContext::PetersonContext(i64 m_, i64 n_)
    : m(m_), n(n_), k(n_ - 1), u(checked_u(m_, n_)) {}

Lift lift(const PetersonContext& ctx, const Partition& lam) {
    require_partition(lam);
    require(fits_in_box(lam, ctx.m, ctx.n - ctx.m), "lift: shape outside box");
    AffinePermutation v = shape_to_perm(ctx.m, ctx.n, lam);
    AffinePermutation w = v;
    i64 bound = diagonal_boxes(lam);  // r = diag always lands in the coset set
    for (i64 r = 0; r <= bound; ++r) {
        if (is_grassmannian(w)) return Lift{w, r};
        w = w * ctx.u;
    }
    fail("lift: no increasing window up to the diagonal bound");
}

QClass psi(const PetersonContext& ctx, const NilCoxElem& elem) {
    return psi_stages(ctx, elem, nullptr);
}

QClass peterson_product(const PetersonContext& ctx, const Partition& lam, const Partition& mu,
                        std::vector<std::string>* trace) {
    Lift l1 = lift(ctx, lam);
    Lift l2 = lift(ctx, mu);
    Partition kb1 = grassmannian_to_kbounded(l1.w);
    Partition kb2 = grassmannian_to_kbounded(l2.w);
    if (trace) {
        for (const auto& [shape, l, kb] :
             {std::tie(lam, l1, kb1), std::tie(mu, l2, kb2)})
            trace->push_back(json{{"stage", "lift"},
                                  {"shape", shape_json(shape)},
                                  {"window", l.w.window()},
                                  {"r", l.r},
                                  {"kbounded", shape_json(kb)}}
                                 .dump());
    }

    NilCoxElem a = noncomm_kschur(ctx.n, kb1);
    NilCoxElem b = noncomm_kschur(ctx.n, kb2);
    NilCoxElem prod = nc_multiply(a, b);
    if (trace)
        trace->push_back(json{{"stage", "noncommutative_product"},
                              {"lhs_terms", a.terms.size()},
                              {"rhs_terms", b.terms.size()},
                              {"product_terms", prod.terms.size()}}
                             .dump());

    QClass out = qc_shift(psi_stages(ctx, prod, trace), l1.r + l2.r);
    for (const auto& [key, c] : out.terms)
        require(key.first >= 0 && c > 0, "peterson_product: cross-route inconsistency");
    if (trace)
        trace->push_back(json{{"stage", "result"},
                              {"q_shift", l1.r + l2.r},
                              {"terms", class_json(out)}}
                             .dump());
    return out;
}

bool GeneratorReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

GeneratorReport modpet_check(const PetersonContext& ctx) {
    const i64 n = ctx.n;
    const i64 m = ctx.m;
    auto composite = [&](const NilCoxElem& x) {
        return dual_transpose(strange_duality(psi(ctx, x)));
    };
    GeneratorReport rep;
    for (i64 r = 1; r <= n - 1; ++r) {
        QClass want = r <= m ? qc_class(n - m, n, {r}) : qc_zero(n - m, n);
        rep.entries.push_back({"h" + std::to_string(r), composite(htilde(n, r)) == want});
    }
    for (i64 r = 1; r <= n - 1; ++r) {
        QClass want = r <= n - m ? qc_class(n - m, n, Partition(r, 1)) : qc_zero(n - m, n);
        rep.entries.push_back({"e" + std::to_string(r), composite(etilde(n, r)) == want});
    }
    QClass z = composite(nc_multiply(etilde(n, n - m), htilde(n, m)));
    rep.entries.push_back({"z", z == qc_class(n - m, n, {}, 1)});
    return rep;
}

}  // namespace qhgr
