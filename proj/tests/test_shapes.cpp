#include <doctest.h>

#include "qhgr/enumerate.hpp"
#include "qhgr/shapes.hpp"

using namespace qhgr;

TEST_CASE("partition basics") {
    CHECK(is_partition({}));
    CHECK(is_partition({3, 1, 1}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK_FALSE(is_partition({2, 0}));
    CHECK(conjugate({4, 3, 2, 2}) == Partition{4, 4, 2, 1});
    CHECK(conjugate(conjugate(Partition{6, 5, 3, 3, 2, 1})) == Partition{6, 5, 3, 3, 2, 1});
    CHECK(partition_size({3, 2, 2, 1, 1}) == 9);
    CHECK(diagonal_boxes({3, 2, 2, 1, 1}) == 2);
    CHECK(diagonal_boxes({}) == 0);
}

TEST_CASE("hook lengths") {
    auto h = hook_lengths({6, 5, 3, 3, 2, 1});
    CHECK(h[0][1] == 9);
    CHECK(h[0][0] == 11);
    auto h2 = hook_lengths({2, 1});
    CHECK(h2[0][0] == 3);
    CHECK(h2[0][1] == 1);
    CHECK(h2[1][0] == 1);
}

TEST_CASE("bounded partitions to cores") {
    CHECK(kbounded_to_core(4, {2, 1, 1}) == Partition{3, 1, 1});
    CHECK(kbounded_to_core(5, {4, 3, 2, 2}) == Partition{9, 5, 2, 2});
    CHECK(kbounded_to_core(3, {}) == Partition{});
    CHECK(core_to_kbounded(4, {3, 1, 1}) == Partition{2, 1, 1});
    CHECK(core_to_kbounded(5, {9, 5, 2, 2}) == Partition{4, 3, 2, 2});
    CHECK(is_core(4, {3, 1, 1}));
    CHECK_FALSE(is_core(3, {2, 1}));
}

TEST_CASE("cores to words") {
    CHECK(core_to_word(4, {3, 1, 1}).letters == std::vector<i64>{2, 1, 3, 0});
    CHECK(word_to_core(Word{4, {2, 1, 3, 0}}) == Partition{3, 1, 1});
    CHECK(word_to_core(Word{3, {}}) == Partition{});
    CHECK_THROWS(word_to_core(Word{3, {0, 0}}));  // second letter removes
}

TEST_CASE("bijection round-trips through cores and words") {
    for (i64 n = 2; n <= 5; ++n) {
        for (const auto& w : grassmannians_up_to_length(n, 7)) {
            Word word = reduced_word(w);
            Partition core = word_to_core(word);
            CHECK(is_core(n, core));
            CHECK(from_word(core_to_word(n, core)) == w);
            Partition lam = core_to_kbounded(n, core);
            CHECK(kbounded_to_core(n, lam) == core);
            CHECK(partition_size(lam) == w.length());
            CHECK(grassmannian_to_kbounded(w) == lam);
            CHECK(kbounded_to_grassmannian(n, lam) == w);
        }
    }
}

TEST_CASE("conjugating a bounded partition inside its core") {
    CHECK(kconjugate(5, {4, 3, 2, 2}) == Partition{2, 2, 1, 1, 1, 1, 1, 1, 1});
    CHECK(kconjugate(4, {1, 1}) == Partition{2});
    for (i64 n = 2; n <= 5; ++n)
        for (const auto& lam : partitions_bounded(n - 1, 8))
            CHECK(kconjugate(n, kconjugate(n, lam)) == lam);
}

TEST_CASE("letter complement transposes the core") {
    for (i64 n = 2; n <= 5; ++n) {
        for (const auto& w : grassmannians_up_to_length(n, 6)) {
            Word word = reduced_word(w);
            Word comp{n, {}};
            for (i64 t : word.letters) comp.letters.push_back((n - t) % n);
            CHECK(word_to_core(comp) == conjugate(word_to_core(word)));
        }
    }
}

TEST_CASE("shapes in a box as window permutations") {
    auto w = shape_to_perm(5, 9, {3, 2, 2, 1, 1});
    CHECK(w.window() == std::vector<i64>{2, 3, 5, 6, 8, 1, 4, 7, 9});
    CHECK(perm_to_shape(5, 9, w) == Partition{3, 2, 2, 1, 1});
    CHECK(shape_to_perm(1, 3, {2}) == from_word(3, {2, 1}));
    CHECK(shape_to_perm(2, 4, {}).is_identity());
    CHECK(shape_to_bits(5, 9, {3, 2, 2, 1, 1}) == std::vector<int>{0, 1, 1, 0, 1, 1, 0, 1, 0});
    CHECK(bits_to_shape(5, 9, {0, 1, 1, 0, 1, 1, 0, 1, 0}) == Partition{3, 2, 2, 1, 1});
    CHECK_THROWS(shape_to_perm(2, 4, {3}));  // too wide for the box
}

TEST_CASE("box dualities") {
    CHECK(transpose_shape(5, 9, {3, 2, 2, 1, 1}) == Partition{5, 3, 1});
    CHECK(complement_shape(2, 4, {2, 1}) == Partition{1});
    CHECK(complement_shape(2, 4, {}) == Partition{2, 2});

    auto [mu, d] = strange_dual(5, 9, {3, 2, 2, 1, 1});
    CHECK(mu == Partition{4, 3, 1, 1});
    CHECK(d == 2);
    auto [e, d0] = strange_dual(3, 7, {});
    CHECK(e == Partition{});
    CHECK(d0 == 0);

    for (i64 n = 2; n <= 6; ++n)
        for (i64 m = 1; m < n; ++m)
            for (const auto& lam : partitions_in_box(m, n - m)) {
                CHECK(strange_dual(m, n, strange_dual(m, n, lam).shape).shape == lam);
                CHECK(complement_shape(m, n, complement_shape(m, n, lam)) == lam);
                CHECK(transpose_shape(n - m, n, transpose_shape(m, n, lam)) == lam);
                CHECK(bits_to_shape(m, n, shape_to_bits(m, n, lam)) == lam);
            }
}

TEST_CASE("border strip removal") {
    auto one = rim_hook_removals(3, {2, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].shape == Partition{});
    CHECK(one[0].height == 2);

    auto big = rim_hook_removals(9, {6, 5, 3, 3, 2, 1});
    bool found = false;
    for (const auto& r : big) found |= r.shape == Partition{4, 2, 2, 1, 1, 1} && r.height == 5;
    CHECK(found);

    CHECK(rim_hook_removals(5, {2, 1}).empty());

    // Peeling a strip drops the size by exactly the strip length and gives a
    // shape whose strip count matches the hook count.
    for (const auto& lam : partitions_bounded(5, 9))
        for (i64 len = 2; len <= 6; ++len) {
            auto hooks = hook_lengths(lam);
            i64 expect = 0;
            for (const auto& row : hooks)
                for (i64 h : row) expect += h == len;
            auto rems = rim_hook_removals(len, lam);
            CHECK((i64)rems.size() == expect);
            for (const auto& r : rems) {
                CHECK(is_partition(r.shape));
                CHECK(partition_size(r.shape) == partition_size(lam) - len);
            }
        }
}
