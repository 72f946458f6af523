#include <doctest.h>

#include "qhgr/oracles.hpp"
#include "qhgr/affine.hpp"

#include <random>

using namespace qhgr;

namespace {

AffinePermutation fw(i64 n, std::vector<i64> letters) { return from_word(n, letters); }

}  // namespace

TEST_CASE("window validation") {
    CHECK_NOTHROW(AffinePermutation(3, {-2, 2, 6}));
    CHECK_THROWS(AffinePermutation(3, {1, 2, 4}));  // bad sum
    CHECK_THROWS(AffinePermutation(3, {0, 3, 3}));  // repeated residue
    CHECK_THROWS(AffinePermutation(1, {1}));
}

TEST_CASE("periodic extension and products") {
    auto w = fw(3, {1, 2, 0});
    CHECK(w.window() == std::vector<i64>{-2, 3, 5});
    CHECK(w(4) == 1);
    CHECK(w(0) == 2);
    CHECK(w(-2) == -5);

    CHECK(fw(3, {2, 1}) * fw(3, {1, 2, 0}) == fw(3, {0}));
    CHECK(fw(3, {1}) * fw(3, {1, 2, 0}) == fw(3, {2, 0}));
}

TEST_CASE("inverse and powers") {
    auto u = u_element(3, 1);
    CHECK((u * u.inverse()).is_identity());
    CHECK((u.inverse() * u).is_identity());
    CHECK(u.pow(2) == u * u);
    CHECK(u.pow(-1) == u.inverse());
    CHECK(u.pow(0).is_identity());
    CHECK(u.inverse().window() == std::vector<i64>{4, 0, 2});
}

TEST_CASE("length of a translation window") {
    auto w = fw(3, {1, 2, 1, 0});
    CHECK(w.window() == std::vector<i64>{-2, 2, 6});
    CHECK(w.length() == 4);
    CHECK(w == translation(3, {-1, 0, 1}));
}

TEST_CASE("descents") {
    auto w = fw(3, {1, 2, 1, 0});
    CHECK(w.right_descent(0));
    CHECK_FALSE(w.right_descent(1));
    CHECK_FALSE(w.right_descent(2));

    auto v = fw(3, {1, 2, 0});
    CHECK(v.left_descent(1));
    CHECK_FALSE(v.left_descent(0));
}

TEST_CASE("grassmannian windows increase") {
    CHECK(fw(3, {1, 0}).is_grassmannian());
    CHECK_FALSE(fw(3, {0, 1}).is_grassmannian());
    CHECK(AffinePermutation(4).is_grassmannian());
}

TEST_CASE("grassmannian iff every reduced word ends in 0") {
    // Equivalent formulation: the right descent set is contained in {s_0}.
    for (i64 n = 2; n <= 4; ++n) {
        for (const auto& [win, len] : oracles::bfs_lengths(n, 6)) {
            AffinePermutation w(n, win);
            bool only_zero = true;
            for (i64 t = 1; t < n; ++t) only_zero &= !w.right_descent(t);
            CHECK(w.is_grassmannian() == (w.is_identity() || (only_zero && w.right_descent(0))));
            (void)len;
        }
    }
}

TEST_CASE("reduced words round-trip") {
    for (i64 n = 2; n <= 4; ++n) {
        for (const auto& [win, len] : oracles::bfs_lengths(n, 7)) {
            AffinePermutation w(n, win);
            Word word = reduced_word(w);
            CHECK((i64)word.letters.size() == len);
            CHECK(from_word(word) == w);
        }
    }
}

TEST_CASE("length agrees with Cayley graph distance") {
    for (i64 n = 2; n <= 4; ++n)
        for (const auto& [win, len] : oracles::bfs_lengths(n, 6))
            CHECK(AffinePermutation(n, win).length() == len);
}

TEST_CASE("length is subadditive") {
    std::mt19937 rng(20260817);
    for (i64 n = 2; n <= 5; ++n) {
        auto table = oracles::bfs_lengths(n, 5);
        std::vector<std::vector<i64>> wins;
        for (const auto& [win, len] : table) wins.push_back(win);
        std::uniform_int_distribution<size_t> pick(0, wins.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            AffinePermutation a(n, wins[pick(rng)]), b(n, wins[pick(rng)]);
            CHECK((a * b).length() <= a.length() + b.length());
        }
    }
}

TEST_CASE("translations embed the root lattice") {
    std::mt19937 rng(7);
    for (i64 n = 2; n <= 5; ++n) {
        std::uniform_int_distribution<i64> entry(-2, 2);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<i64> lam(n), mu(n), sum(n);
            i64 sl = 0, sm = 0;
            for (i64 i = 0; i + 1 < n; ++i) {
                lam[i] = entry(rng);
                mu[i] = entry(rng);
                sl += lam[i];
                sm += mu[i];
            }
            lam[n - 1] = -sl;
            mu[n - 1] = -sm;
            for (i64 i = 0; i < n; ++i) sum[i] = lam[i] + mu[i];
            CHECK(translation(n, lam) * translation(n, mu) == translation(n, sum));
        }
    }
    CHECK_THROWS(translation(3, {1, 0, 0}));
}

TEST_CASE("checked arithmetic rejects overflow") {
    i64 big = i64{1} << 62;
    CHECK_THROWS_AS(translation(2, {big, -big}), std::overflow_error);
}

TEST_CASE("coset cut elements") {
    CHECK(u_element(2, 1) == fw(2, {1, 0}));
    CHECK(u_element(3, 1) == fw(3, {1, 2, 0}));
    CHECK(u_element(8, 3) == fw(8, {3, 4, 5, 6, 7, 2, 1, 0}));
    for (i64 n = 2; n <= 6; ++n)
        for (i64 m = 1; m < n; ++m) {
            auto u = u_element(n, m);
            CHECK(u.length() == n);
            CHECK(u.is_grassmannian());
        }
}

TEST_CASE("splitting off powers of the cut element") {
    auto [v1, r1] = factor_vur(fw(3, {1, 2, 0}), 1);
    CHECK(v1.is_identity());
    CHECK(r1 == 1);

    auto [v2, r2] = factor_vur(fw(3, {0}), 1);
    CHECK(v2 == fw(3, {2, 1}));
    CHECK(r2 == 1);

    auto [v3, r3] = factor_vur(fw(3, {0, 1, 2, 0}), 1);
    CHECK(v3 == fw(3, {2, 1}));
    CHECK(r3 == 2);

    CHECK_THROWS(factor_vur(fw(3, {1}), 2));  // descent at 1, not 2
}

TEST_CASE("splitting inverts right multiplication by cut powers") {
    for (i64 n = 2; n <= 5; ++n)
        for (i64 m = 1; m < n; ++m) {
            auto u = u_element(n, m);
            // All finite minimal coset representatives: permutations of [1,n]
            // increasing on each side of position m.
            std::vector<AffinePermutation> reps;
            std::vector<i64> base(n);
            for (i64 i = 0; i < n; ++i) base[i] = i + 1;
            std::vector<i64> perm = base;
            do {
                AffinePermutation v(n, perm);
                if (v.is_single_descent_at(m) || v.is_identity()) reps.push_back(v);
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (const auto& v : reps)
                for (i64 r = 0; r <= 4; ++r) {
                    auto [v2, r2] = factor_vur(v * u.pow(r), m);
                    CHECK(v2 == v);
                    CHECK(r2 == r);
                }
        }
}
