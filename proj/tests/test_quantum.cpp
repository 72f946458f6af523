#include "doctest.h"

#include "qhgr/enumerate.hpp"
#include "qhgr/quantum.hpp"

#include <random>

using namespace qhgr;

TEST_CASE("single-row products") {
    CHECK(qpieri(1, 3, 1, {2}) == qc_class(1, 3, {}, 1));
    CHECK(qpieri(2, 4, 1, {2, 2}) == qc_class(2, 4, {1}, 1));
    CHECK(qpieri(2, 4, 1, {1}) == qc_add(qc_class(2, 4, {2}), qc_class(2, 4, {1, 1})));
    CHECK(qpieri(2, 5, 2, {3, 1}) == qc_add(qc_class(2, 5, {3, 3}), qc_class(2, 5, {1}, 1)));
    for (i64 n = 2; n <= 5; ++n)
        for (i64 m = 1; m < n; ++m)
            for (i64 r = 1; r <= n - m; ++r)
                CHECK(qpieri(m, n, r, {}) == qc_class(m, n, {r}));
    CHECK_THROWS_AS(qpieri(1, 3, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(qpieri(1, 3, 1, {1, 1}), std::invalid_argument);
}

TEST_CASE("projective-line and two-plane tables") {
    CHECK(qproduct(1, 3, {1}, {1}) == qc_class(1, 3, {2}));
    CHECK(qproduct(1, 3, {1}, {2}) == qc_class(1, 3, {}, 1));
    CHECK(qproduct(1, 3, {2}, {2}) == qc_class(1, 3, {1}, 1));

    CHECK(qproduct(1, 2, {1}, {1}) == qc_class(1, 2, {}, 1));

    CHECK(qproduct(2, 4, {2, 2}, {2, 2}) == qc_class(2, 4, {}, 2));
    CHECK(qproduct(2, 4, {1}, {1}) == qc_add(qc_class(2, 4, {2}), qc_class(2, 4, {1, 1})));
    CHECK(qproduct(2, 4, {2, 1}, {2, 1}) ==
          qc_add(qc_class(2, 4, {2}, 1), qc_class(2, 4, {1, 1}, 1)));
}

TEST_CASE("ring axioms on sampled classes") {
    std::mt19937 rng(414243);
    for (i64 n = 3; n <= 5; ++n) {
        for (i64 m = 1; m < n; ++m) {
            auto shapes = partitions_in_box(m, n - m);
            auto pick = [&] { return shapes[rng() % shapes.size()]; };
            for (int trial = 0; trial < 6; ++trial) {
                QClass a = qc_class(m, n, pick());
                QClass b = qc_class(m, n, pick());
                QClass c = qc_class(m, n, pick());
                CHECK(qproduct(a, b) == qproduct(b, a));
                CHECK(qproduct(qproduct(a, b), c) == qproduct(a, qproduct(b, c)));
                CHECK(qproduct(qc_class(m, n, {}), a) == a);
                // bilinearity over signed combinations
                QClass lhs = qproduct(qc_sub(a, qc_scale(b, 2)), c);
                QClass rhs = qc_sub(qproduct(a, c), qc_scale(qproduct(b, c), 2));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("degrees are homogeneous and the q=0 part is classical") {
    for (i64 n = 2; n <= 6; ++n) {
        for (i64 m = 1; m < n; ++m) {
            auto shapes = partitions_in_box(m, n - m);
            for (const auto& lam : shapes) {
                for (const auto& mu : shapes) {
                    QClass prod = qproduct(m, n, lam, mu);
                    i64 grade = partition_size(lam) + partition_size(mu);
                    for (const auto& [key, c] : prod.terms) {
                        CHECK(c > 0);
                        CHECK(key.first >= 0);
                        CHECK(partition_size(key.second) + n * key.first == grade);
                    }
                    if (grade > m * (n - m)) {
                        bool has_classical = false;
                        for (const auto& [key, c] : prod.terms)
                            if (key.first == 0) has_classical = true;
                        CHECK_FALSE(has_classical);
                    }
                }
            }
        }
    }
}

TEST_CASE("transpose, complement, and q-inverting dualities") {
    CHECK(strange_duality(qc_class(5, 9, {3, 2, 2, 1, 1})) == qc_class(5, 9, {4, 3, 1, 1}, -2));
    CHECK(strange_duality(qc_class(1, 3, {})) == qc_class(1, 3, {}));
    CHECK(dual_transpose(qc_class(2, 5, {3, 1}, 2)) == qc_class(3, 5, {2, 1, 1}, 2));
    CHECK(dual_complement(qc_class(2, 5, {3, 1})) == qc_class(2, 5, {2}));

    for (i64 n = 2; n <= 7; ++n) {
        for (i64 m = 1; m < n; ++m) {
            for (const auto& lam : partitions_in_box(m, n - m)) {
                QClass x = qc_class(m, n, lam, -1, 3);
                CHECK(strange_duality(strange_duality(x)) == x);
                CHECK(dual_transpose(dual_transpose(x)) == x);
                CHECK(dual_complement(dual_complement(x)) == x);
            }
        }
    }
}

TEST_CASE("dualities respect products") {
    std::mt19937 rng(5150);
    for (i64 n = 2; n <= 5; ++n) {
        for (i64 m = 1; m < n; ++m) {
            auto shapes = partitions_in_box(m, n - m);
            auto pick = [&] { return shapes[rng() % shapes.size()]; };
            for (int trial = 0; trial < 8; ++trial) {
                QClass a = qc_class(m, n, pick());
                QClass b = qc_class(m, n, pick());
                CHECK(dual_transpose(qproduct(a, b)) ==
                      qproduct(dual_transpose(a), dual_transpose(b)));
                CHECK(strange_duality(qproduct(a, b)) ==
                      qproduct(strange_duality(a), strange_duality(b)));
            }
        }
    }
}
