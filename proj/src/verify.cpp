#include "qhgr/verify.hpp"

#include "qhgr/affine.hpp"
#include "qhgr/enumerate.hpp"
#include "qhgr/nilcox.hpp"
#include "qhgr/niltl.hpp"
#include "qhgr/oracles.hpp"
#include "qhgr/peterson.hpp"
#include "qhgr/quantum.hpp"
#include "qhgr/roots.hpp"
#include "qhgr/shapes.hpp"
#include "qhgr/textio.hpp"

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace qhgr {

namespace {

// Accumulates check outcomes; only the first failure is rendered, so hot
// loops pass a lazy label and pay nothing on the passing path.
struct Tally {
    bool ok = true;
    i64 count = 0;
    std::string first;

    void note(bool cond, std::string label) {
        ++count;
        if (!cond && ok) {
            ok = false;
            first = std::move(label);
        }
    }
    template <std::invocable F>
    void note(bool cond, F&& label) {
        ++count;
        if (!cond && ok) {
            ok = false;
            first = std::forward<F>(label)();
        }
    }
};

std::string gr(i64 m, i64 n) { return "Gr(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

NilCoxElem sum_of_words(i64 n, const std::vector<std::vector<i64>>& words) {
    auto out = nc_zero(n);
    for (const auto& w : words) out = nc_add(out, nc_term(from_word(n, w)));
    return out;
}

void golden_table_gr13(Tally& t, const VerifyOptions&) {
    PetersonContext ctx(1, 3);
    struct Row {
        Partition a, b;
        QClass want;
    };
    const std::vector<Row> rows = {
        {{1}, {1}, qc_class(1, 3, {2})},
        {{1}, {2}, qc_class(1, 3, {}, 1)},
        {{2}, {2}, qc_class(1, 3, {1}, 1)},
    };
    for (const auto& row : rows) {
        std::string prod = "s[" + shape_to_text(row.a) + "]*s[" + shape_to_text(row.b) + "]";
        t.note(qproduct(1, 3, row.a, row.b) == row.want,
               "Pieri route " + prod + " != " + qclass_to_text(row.want));
        t.note(peterson_product(ctx, row.a, row.b) == row.want,
               "affine route " + prod + " != " + qclass_to_text(row.want));
    }
}

void cross_route_equality(Tally& t, const VerifyOptions& o) {
    auto check_pair = [&](PetersonContext& ctx, const Partition& a, const Partition& b) {
        t.note(peterson_product(ctx, a, b) == qproduct(ctx.m, ctx.n, a, b), [&] {
            return "route mismatch at " + gr(ctx.m, ctx.n) + " for s[" + shape_to_text(a) +
                   "]*s[" + shape_to_text(b) + "]";
        });
    };
    for (i64 n = 2; n <= std::min<i64>(5, o.max_n); ++n) {
        for (i64 m = 1; m < n; ++m) {
            PetersonContext ctx(m, n);
            auto shapes = partitions_in_box(m, n - m);
            for (const auto& a : shapes)
                for (const auto& b : shapes) check_pair(ctx, a, b);
        }
        clear_nilcox_caches();
    }
    if (o.max_n >= 6) {
        const i64 n = 6;
        for (i64 m = 1; m < n; ++m) {
            PetersonContext ctx(m, n);
            auto shapes = partitions_in_box(m, n - m);
            std::mt19937_64 gen(o.seed + 1000003 * static_cast<u64>(m));
            std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
            for (i64 s = 0; s < o.samples_per_m; ++s) check_pair(ctx, shapes[pick(gen)], shapes[pick(gen)]);
            clear_nilcox_caches();
        }
    }
}

void j_basis_structure(Tally& t, const VerifyOptions& o) {
    for (i64 n = 2; n <= std::min<i64>(5, o.max_n); ++n) {
        for (const auto& w : grassmannians_up_to_length(n, 10)) {
            auto ncs = noncomm_kschur(n, grassmannian_to_kbounded(w));
            i64 stray = 0;
            for (const auto& [v, c] : ncs.terms)
                if (v.is_grassmannian() && !(v == w && c == 1)) ++stray;
            t.note(stray == 0 && ncs.terms.count(w) == 1, [&] {
                return "increasing-window support wrong in the expansion indexed by " +
                       window_to_text(w);
            });
        }
        clear_nilcox_caches();
    }
}

void worked_examples(Tally& t, const VerifyOptions&) {
    // n = 4 chain between a bounded shape, its core, and a reduced word.
    t.note(kbounded_to_core(4, {2, 1, 1}) == Partition{3, 1, 1}, "core of (2,1,1) at n=4");
    t.note(core_to_kbounded(4, {3, 1, 1}) == Partition{2, 1, 1}, "bounded shape of (3,1,1) at n=4");
    t.note(word_to_core(Word{4, {2, 1, 3, 0}}) == Partition{3, 1, 1}, "core grown by the word 2,1,3,0");
    auto w2130 = from_word(4, {2, 1, 3, 0});
    t.note(w2130.is_grassmannian() && w2130.length() == 4, "word 2,1,3,0 is reduced and increasing");
    t.note(grassmannian_to_kbounded(w2130) == Partition{2, 1, 1}, "bounded shape of the word 2,1,3,0");
    t.note(from_word(core_to_word(4, {3, 1, 1})) == w2130, "word read back off the core (3,1,1)");

    t.note(kconjugate(5, {4, 3, 2, 2}) == Partition{2, 2, 1, 1, 1, 1, 1, 1, 1},
           "conjugate of (4,3,2,2) through the 5-core transpose");
    t.note(kbounded_to_core(5, {4, 3, 2, 2}) == Partition{9, 5, 2, 2}, "5-core of (4,3,2,2)");

    t.note(kschur_h_poly(5, {1, 1}) == HPolynomial{{{{1, 1}, 1}, {{2}, -1}}}, "h-expansion of (1,1) at k=4");
    t.note(kschur_h_poly(5, {3, 1, 1}) == HPolynomial{{{{3, 1, 1}, 1}, {{3, 2}, -1}}},
           "h-expansion of (3,1,1) at k=4");
    t.note(kschur_h_poly(5, {4, 3, 1, 1}) == HPolynomial{{{{4, 3, 1, 1}, 1}, {{4, 3, 2}, -1}}},
           "h-expansion of (4,3,1,1) at k=4");

    t.note(htilde(4, 2) == sum_of_words(4, {{1, 0}, {2, 1}, {3, 2}, {0, 3}, {2, 0}, {3, 1}}),
           "six decreasing words of length 2 at n=4");
    t.note(htilde(4, 3) == sum_of_words(4, {{2, 1, 0}, {3, 2, 1}, {0, 3, 2}, {1, 0, 3}}),
           "four decreasing words of length 3 at n=4");

    t.note(noncomm_kschur(5, {1, 1}) == sum_of_words(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                                         {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}),
           "ten-term expansion of the (1,1) element at n=5");

    // The three length-two products of basis elements at n = 3, their
    // expansions on the increasing-window basis, and their images in Gr(1,3).
    PetersonContext c13(1, 3);
    auto e2 = etilde(3, 2), h1 = htilde(3, 1);
    auto ee = nc_multiply(e2, e2), eh = nc_multiply(e2, h1), hh = nc_multiply(h1, h1);
    auto jelem = [](const std::vector<i64>& word) {
        return noncomm_kschur(3, grassmannian_to_kbounded(from_word(3, word)));
    };
    t.note(ee == sum_of_words(3, {{2, 0, 1, 2}, {1, 2, 0, 1}, {0, 1, 2, 0}}), "three-term square of e2");
    t.note(eh == sum_of_words(3, {{2, 0, 1}, {2, 0, 2}, {1, 2, 0}, {1, 2, 1}, {0, 1, 0}, {0, 1, 2}}),
           "six-term product e2*h1");
    t.note(hh == sum_of_words(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}), "six-term square of h1");
    t.note(ee == jelem({0, 1, 2, 0}), "e2^2 as a single basis element");
    t.note(eh == jelem({1, 2, 0}), "e2*h1 as a single basis element");
    t.note(hh == nc_add(jelem({1, 0}), jelem({2, 0})), "h1^2 as a two-term basis sum");
    t.note(psi(c13, ee) == qc_class(1, 3, {2}, -2), "image of e2^2 in Gr(1,3)");
    t.note(psi(c13, eh) == qc_class(1, 3, {}, -1), "image of e2*h1 in Gr(1,3)");
    t.note(psi(c13, hh) == qc_class(1, 3, {1}, -1), "image of h1^2 in Gr(1,3)");

    // The distinguished length-n elements and their hook shapes.
    auto u13 = u_element(3, 1);
    t.note(u13 == from_word(3, {1, 2, 0}), "u at (m,n)=(1,3) spelled 1,2,0");
    t.note(u13.window() == std::vector<i64>{-2, 3, 5}, "window of u at (1,3)");
    t.note(grassmannian_to_kbounded(u13) == Partition{1, 1, 1}, "hook shape of u at (1,3)");
    auto u38 = u_element(8, 3);
    t.note(u38 == from_word(8, {3, 4, 5, 6, 7, 2, 1, 0}), "u at (m,n)=(3,8) spelled 3,4,5,6,7,2,1,0");
    t.note(u38.is_grassmannian() && u38.length() == 8, "u at (3,8) increasing of length 8");
    t.note(grassmannian_to_kbounded(u38) == Partition{3, 1, 1, 1, 1, 1}, "hook shape of u at (3,8)");

    // The identity plus the six shortest nontrivial increasing-window
    // elements surviving the coset filter at (m,n)=(1,3); every other one of
    // length <= 6 is filtered out.
    std::vector<AffinePermutation> expected{AffinePermutation(3)}, got;
    for (const auto& word : std::vector<std::vector<i64>>{
             {0}, {2, 0}, {1, 2, 0}, {0, 1, 2, 0}, {2, 0, 1, 2, 0}, {1, 2, 0, 1, 2, 0}})
        expected.push_back(from_word(3, word));
    for (const auto& w : grassmannians_up_to_length(3, 6))
        if (is_in_SnP(w, 1)) got.push_back(w);
    auto by_length = [](const AffinePermutation& a, const AffinePermutation& b) {
        return std::make_pair(a.length(), a.window()) < std::make_pair(b.length(), b.window());
    };
    std::sort(got.begin(), got.end(), by_length);
    std::sort(expected.begin(), expected.end(), by_length);
    t.note(got == expected, "six shortest coset-set members at (1,3)");
    t.note(!is_in_SnP(from_word(3, {1, 0}), 1), "the word 1,0 is filtered out at (1,3)");

    auto sd = strange_dual(5, 9, {3, 2, 2, 1, 1});
    t.note(sd.shape == Partition{4, 3, 1, 1} && sd.diag == 2, "reversed 01-word of (3,2,2,1,1) in Gr(5,9)");
}

void quotient_relations(Tally& t, const VerifyOptions& o) {
    for (i64 n = 3; n <= std::min<i64>(5, o.max_n); ++n)
        t.note(verify_eheq(n), "generating-series identity fails at n=" + std::to_string(n));
    for (i64 n = 2; n <= std::min<i64>(6, o.max_n); ++n) {
        std::vector<NilTLElem> E{ntl_one(n)}, H{ntl_one(n)};
        for (i64 r = 1; r < n; ++r) {
            E.push_back(project(etilde(n, r)));
            H.push_back(project(htilde(n, r)));
        }
        auto where = [n](i64 i, i64 j) {
            return " (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
        };
        for (i64 i = 1; i < n; ++i)
            for (i64 j = 1; j < n; ++j) {
                auto eh = ntl_multiply(E[i], H[j]), he = ntl_multiply(H[j], E[i]);
                if (i + j > n)
                    t.note(eh.terms.empty() && he.terms.empty(), [&] { return "e*h above threshold nonzero" + where(i, j); });
                else
                    t.note(eh == he, [&] { return "e and h fail to commute" + where(i, j); });
                if (j >= i) {
                    t.note(ntl_multiply(E[i], E[j]) == ntl_multiply(E[j], E[i]),
                           [&] { return "e generators fail to commute" + where(i, j); });
                    t.note(ntl_multiply(H[i], H[j]) == ntl_multiply(H[j], H[i]),
                           [&] { return "h generators fail to commute" + where(i, j); });
                }
            }
        for (i64 i = 1; i < n; ++i) {
            auto z = ntl_multiply(E[i], H[n - i]);
            t.note(!z.terms.empty(), [&] { return "threshold product vanishes" + where(i, n - i); });
            for (i64 s = 0; s < n; ++s) {
                auto a = project(nc_term(from_word(n, {s})));
                t.note(ntl_multiply(z, a) == ntl_multiply(a, z),
                       [&] { return "threshold product not central" + where(i, s); });
            }
        }
    }
}

void generator_thresholds(Tally& t, const VerifyOptions& o) {
    for (i64 n = 2; n <= std::min<i64>(6, o.max_n); ++n)
        for (i64 m = 1; m < n; ++m) {
            PetersonContext ctx(m, n);
            for (i64 r = 1; r < n; ++r) {
                auto where = [&] {
                    return gr(m, n) + " at r=" + std::to_string(r);
                };
                t.note(qc_is_zero(psi(ctx, htilde(n, r))) == (r > m),
                       [&] { return "h image vanishing wrong in " + where(); });
                t.note(qc_is_zero(psi(ctx, etilde(n, r))) == (r > n - m),
                       [&] { return "e image vanishing wrong in " + where(); });
            }
        }
}

void braid_coset_exclusion(Tally& t, const VerifyOptions& o) {
    for (i64 n = 2; n <= std::min<i64>(5, o.max_n); ++n)
        for (const auto& w : grassmannians_up_to_length(n, 8))
            if (supports_braid(w))
                for (i64 m = 1; m < n; ++m)
                    t.note(!is_in_SnP(w, m), [&] {
                        return "braided element " + window_to_text(w) + " kept at m=" + std::to_string(m);
                    });
}

void involutions_isomorphisms(Tally& t, const VerifyOptions& o) {
    for (i64 n = 2; n <= std::min<i64>(7, o.max_n); ++n)
        for (i64 m = 1; m < n; ++m) {
            auto shapes = partitions_in_box(m, n - m);
            QClass mixed = qc_zero(m, n);
            i64 i = 0;
            for (const auto& lam : shapes) {
                auto x = qc_class(m, n, lam, -1, 3);
                t.note(strange_duality(strange_duality(x)) == x, [&] {
                    return "duality not involutive on s[" + shape_to_text(lam) + "] in " + gr(m, n);
                });
                mixed = qc_add(mixed, qc_class(m, n, lam, i % 3 - 1, 1 + i));
                ++i;
            }
            t.note(strange_duality(strange_duality(mixed)) == mixed,
                   [&] { return "duality not involutive on a mixed class in " + gr(m, n); });
        }

    for (i64 n = 2; n <= std::min<i64>(6, o.max_n); ++n)
        for (const auto& lam : partitions_bounded(n - 1, 10))
            t.note(kconjugate(n, kconjugate(n, lam)) == lam, [&] {
                return "conjugation not involutive on (" + shape_to_text(lam) + ") at n=" + std::to_string(n);
            });

    std::mt19937_64 gen(o.seed ^ 0x9e3779b97f4a7c15ull);
    for (i64 n = 2; n <= std::min<i64>(5, o.max_n); ++n)
        for (i64 m = 1; m < n; ++m) {
            auto shapes = partitions_in_box(m, n - m);
            std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
            for (i64 trial = 0; trial < 8; ++trial) {
                const auto& a = shapes[pick(gen)];
                const auto& b = shapes[pick(gen)];
                auto p = qproduct(m, n, a, b);
                auto label = [&](const char* map) {
                    return std::string(map) + " does not respect s[" + shape_to_text(a) + "]*s[" +
                           shape_to_text(b) + "] in " + gr(m, n);
                };
                t.note(dual_transpose(p) == qproduct(dual_transpose(qc_class(m, n, a)),
                                                     dual_transpose(qc_class(m, n, b))),
                       [&] { return label("transpose"); });
                t.note(strange_duality(p) == qproduct(strange_duality(qc_class(m, n, a)),
                                                      strange_duality(qc_class(m, n, b))),
                       [&] { return label("duality"); });
            }
        }

    for (i64 n = 2; n <= std::min<i64>(6, o.max_n); ++n)
        for (i64 m = 1; m < n; ++m) {
            auto first_fail = [](const GeneratorReport& rep) {
                for (const auto& e : rep.entries)
                    if (!e.pass) return e.name;
                return std::string("?");
            };
            PetersonContext ctx(m, n);
            auto mp = modpet_check(ctx);
            t.note(mp.all_pass(), [&] {
                return "composite generator image wrong in " + gr(m, n) + ": " + first_fail(mp);
            });
            auto pg = postnikov_generator_check(m, n);
            t.note(pg.all_pass(), [&] {
                return "factored generator image wrong in " + gr(m, n) + ": " + first_fail(pg);
            });
        }
}

void infrastructure_oracles(Tally& t, const VerifyOptions& o) {
    for (i64 n = 2; n <= std::min<i64>(5, o.max_n); ++n) {
        auto dist = oracles::bfs_lengths(n, 8);
        auto elems = elements_up_to_length(n, 8);
        t.note(dist.size() == elems.size(),
               [&] { return "element census differs from the walk at n=" + std::to_string(n); });
        for (const auto& w : elems) {
            auto it = dist.find(w.window());
            t.note(it != dist.end() && it->second == w.length(),
                   [&] { return "length formula disagrees with the walk at " + window_to_text(w); });
        }
    }

    // n = 2 has no relation a word factor could witness, so the reduced-word
    // search is only meaningful from n = 3 up.
    for (i64 n = 3; n <= std::min<i64>(5, o.max_n); ++n)
        for (const auto& w : elements_up_to_length(n, 10))
            t.note(supports_braid(w) == oracles::braid_word_exists(w),
                   [&] { return "pattern test disagrees with word search at " + window_to_text(w); });

    for (i64 n = 2; n <= std::min<i64>(6, o.max_n); ++n) {
        for (const auto& w : grassmannians_up_to_length(n, 8)) {
            auto core = word_to_core(reduced_word(w));
            auto kb = core_to_kbounded(n, core);
            auto at = [&] { return " at " + window_to_text(w); };
            t.note(kbounded_to_core(n, kb) == core, [&] { return "core round trip fails" + at(); });
            t.note(from_word(core_to_word(n, core)) == w, [&] { return "word round trip fails" + at(); });
            t.note(kbounded_to_grassmannian(n, kb) == w, [&] { return "window round trip fails" + at(); });
            t.note(grassmannian_to_kbounded(w) == kb, [&] { return "bounded-shape round trip fails" + at(); });
        }
        for (i64 m = 1; m < n; ++m)
            for (const auto& lam : partitions_in_box(m, n - m)) {
                auto at = [&] { return " on (" + shape_to_text(lam) + ") in " + gr(m, n); };
                t.note(perm_to_shape(m, n, shape_to_perm(m, n, lam)) == lam,
                       [&] { return "window round trip fails" + at(); });
                t.note(bits_to_shape(m, n, shape_to_bits(m, n, lam)) == lam,
                       [&] { return "01-word round trip fails" + at(); });
            }
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    struct Suite {
        const char* name;
        double budget;  // seconds; 0 means no budget
        void (*run)(Tally&, const VerifyOptions&);
    };
    const std::vector<Suite> suites = {
        {"golden-table-gr13", 1.0, golden_table_gr13},
        {"cross-route-equality", 600.0, cross_route_equality},
        {"j-basis-structure", 0.0, j_basis_structure},
        {"worked-examples", 0.0, worked_examples},
        {"quotient-relations", 60.0, quotient_relations},
        {"generator-thresholds", 0.0, generator_thresholds},
        {"braid-coset-exclusion", 0.0, braid_coset_exclusion},
        {"involutions-isomorphisms", 0.0, involutions_isomorphisms},
        {"infrastructure-oracles", 0.0, infrastructure_oracles},
    };
    std::vector<CriterionResult> out;
    for (const auto& s : suites) {
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        try {
            s.run(t, opts);
        } catch (const std::exception& e) {
            t.note(false, std::string("exception: ") + e.what());
        }
        CriterionResult r;
        r.name = s.name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.pass = t.ok;
        r.detail = t.ok ? std::to_string(t.count) + " checks" : t.first;
        if (r.pass && s.budget > 0 && r.seconds > s.budget) {
            r.pass = false;
            r.detail += " but exceeded the " + std::to_string(static_cast<i64>(s.budget)) + "s budget";
        }
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    clear_nilcox_caches();
    return out;
}

i64 verify_depth_from_env(i64 fallback) {
    const char* s = std::getenv("PETERSON_VERIFY_DEPTH");
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0) return fallback;
    return static_cast<i64>(v);
}

}  // namespace qhgr
