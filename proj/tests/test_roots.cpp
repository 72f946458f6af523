#include <doctest.h>

#include "qhgr/oracles.hpp"
#include "qhgr/enumerate.hpp"
#include "qhgr/roots.hpp"

#include <random>

using namespace qhgr;

TEST_CASE("root basics") {
    CHECK(is_positive({1, 3, 0}));
    CHECK_FALSE(is_positive({3, 1, 0}));
    CHECK(is_positive({3, 1, 1}));
    CHECK_FALSE(is_positive({1, 3, -1}));
    CHECK(simple_root(4, 2) == AffineRoot{2, 3, 0});
    CHECK(simple_root(4, 0) == AffineRoot{4, 1, 1});
    CHECK(highest_root(4) == AffineRoot{1, 4, 0});
    CHECK(bar(AffineRoot{4, 1, 1}) == AffineRoot{4, 1, 0});
    CHECK(simple_coefficients(4, {1, 3, 0}) == std::vector<i64>{1, 1, 0, 0});
    CHECK(simple_coefficients(4, {3, 1, 2}) == std::vector<i64>{-1, -1, 0, 2});
}

TEST_CASE("level-zero action") {
    for (i64 n = 3; n <= 5; ++n)
        for (i64 j = 0; j < n; ++j) {
            AffineRoot a = simple_root(n, j);
            AffineRoot neg = {a.j, a.i, -a.p};
            CHECK(act(from_word(n, {j}), a) == neg);
            CHECK(act(AffinePermutation(n), a) == a);
        }

    // s_{i+2,...,n-1,i-1,...,1,0} sends alpha_1+...+alpha_i to -alpha_{i+1}+delta.
    auto tail_word = [](i64 n, i64 i) {
        std::vector<i64> ls;
        for (i64 t = i + 2; t < n; ++t) ls.push_back(t);
        for (i64 t = i - 1; t >= 0; --t) ls.push_back(t);
        return ls;
    };
    for (i64 n = 4; n <= 6; ++n)
        for (i64 i = 1; i + 1 < n; ++i) {
            auto w2 = from_word(n, tail_word(n, i));
            CHECK(act(w2, AffineRoot{1, i + 1, 0}) == AffineRoot{i + 2, i + 1, 1});
        }
}

TEST_CASE("action respects products") {
    std::mt19937 rng(99);
    for (i64 n = 3; n <= 5; ++n) {
        auto elems = elements_up_to_length(n, 4);
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        std::uniform_int_distribution<i64> root_idx(1, n);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& u = elems[pick(rng)];
            const auto& v = elems[pick(rng)];
            i64 i = root_idx(rng), j = root_idx(rng);
            if (i == j) continue;
            AffineRoot beta{i, j, i64(trial % 3) - 1};
            CHECK(act(u * v, beta) == act(u, act(v, beta)));
        }
    }
}

TEST_CASE("inversion sets") {
    CHECK(inversions(AffinePermutation(3)).empty());
    auto inv = inversions(from_word(3, {0}));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == AffineRoot{3, 1, 1});  // -theta + delta
    CHECK(inversions(from_word(3, {1, 2, 1, 0})).size() == 4);

    for (i64 n = 2; n <= 4; ++n)
        for (const auto& w : elements_up_to_length(n, 6)) {
            auto set = inversions(w);
            CHECK((i64)set.size() == w.length());
            for (const auto& a : set) {
                CHECK(is_positive(a));
                CHECK_FALSE(is_positive(act(w, a)));
            }
        }
}

TEST_CASE("coset membership test") {
    CHECK_FALSE(is_in_SnP(from_word(3, {1, 0}), 1));
    CHECK(is_in_SnP(AffinePermutation(3), 1));
    for (auto word : std::vector<std::vector<i64>>{
             {0}, {2, 0}, {1, 2, 0}, {0, 1, 2, 0}, {2, 0, 1, 2, 0}, {1, 2, 0, 1, 2, 0}})
        CHECK(is_in_SnP(from_word(3, word), 1));
    CHECK_THROWS(is_in_SnP(AffinePermutation(3), 3));
}

TEST_CASE("words avoiding the cut letter stay in the coset set") {
    for (i64 n = 3; n <= 5; ++n)
        for (const auto& w : grassmannians_up_to_length(n, 6)) {
            auto word = reduced_word(w);
            for (i64 m = 1; m < n; ++m) {
                bool uses_m = false;
                for (i64 t : word.letters) uses_m |= t == m;
                if (!uses_m) CHECK(is_in_SnP(w, m));
            }
        }
}

TEST_CASE("cyclic run words and the cut threshold") {
    for (i64 n = 3; n <= 7; ++n)
        for (i64 r = 1; r < n; ++r) {
            std::vector<i64> dec, inc;
            for (i64 t = r - 1; t >= 0; --t) dec.push_back(t);
            for (i64 t = n - r + 1; t < n; ++t) inc.push_back(t);
            inc.push_back(0);
            for (i64 m = 1; m < n; ++m) {
                CHECK(is_in_SnP(from_word(n, dec), m) == (r <= m));
                CHECK(is_in_SnP(from_word(n, inc), m) == (r <= n - m));
            }
        }
}

TEST_CASE("braid detection") {
    CHECK(supports_braid(from_word(3, {1, 2, 1})));
    CHECK(supports_braid(from_word(4, {1, 2, 1})));
    CHECK(supports_braid(from_word(5, {0, 4, 0})));
    for (i64 n = 3; n <= 5; ++n)
        for (i64 t = 0; t < n; ++t) CHECK_FALSE(supports_braid(from_word(n, {t})));
    CHECK_FALSE(supports_braid(from_word(3, {1, 0})));
    CHECK_FALSE(supports_braid(from_word(3, {0, 1, 2, 0})));
}

TEST_CASE("braid detection matches reduced-word search") {
    for (i64 n = 3; n <= 4; ++n)
        for (const auto& w : elements_up_to_length(n, 7))
            CHECK(supports_braid(w) == oracles::braid_word_exists(w));
}

TEST_CASE("braided increasing windows leave every coset set") {
    for (i64 n = 3; n <= 5; ++n)
        for (const auto& w : grassmannians_up_to_length(n, 6))
            if (supports_braid(w))
                for (i64 m = 1; m < n; ++m) CHECK_FALSE(is_in_SnP(w, m));
}

TEST_CASE("dominance helpers") {
    CHECK(is_dominant({2, 0, -2}));
    CHECK_FALSE(is_dominant({0, 1, -1}));
    CHECK(is_antidominant({-2, 0, 2}));
    CHECK(is_antidominant({0, 0, 0}));
}
