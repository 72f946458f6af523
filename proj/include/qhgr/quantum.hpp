#pragma once

#include "qhgr/shapes.hpp"

#include <map>
#include <utility>

namespace qhgr {

// Integer combination of classes q^d sigma_lam with lam inside the m x (n-m)
// box.  q-degrees may be negative (Laurent).  Map keys iterate by q-degree,
// then shape, which fixes the printed term order.
struct QClass {
    i64 m = 0;
    i64 n = 0;
    std::map<std::pair<i64, Partition>, i64> terms;  // (qdeg, shape) -> nonzero coeff
    bool operator==(const QClass&) const = default;
};

QClass qc_zero(i64 m, i64 n);
QClass qc_class(i64 m, i64 n, const Partition& shape, i64 qdeg = 0, i64 coeff = 1);
QClass qc_add(const QClass& a, const QClass& b);
QClass qc_sub(const QClass& a, const QClass& b);
QClass qc_scale(const QClass& a, i64 c);
QClass qc_shift(const QClass& a, i64 d);  // multiply by q^d
bool qc_is_zero(const QClass& a);

// sigma_(r) * sigma_lam: horizontal r-strips of lam inside the box contribute
// at q^0; strips overflowing into row m+1 with full first row lose their
// length-n rim hook and contribute at q^1.
QClass qpieri(i64 m, i64 n, i64 r, const Partition& lam);

// General product: expand the left factor rows into a signed determinant of
// single-row classes and apply qpieri repeatedly.  A product of nonnegative
// combinations must come out nonnegative; a negative coefficient throws.
QClass qproduct(const QClass& a, const QClass& b);
QClass qproduct(i64 m, i64 n, const Partition& lam, const Partition& mu);

// sigma_lam -> sigma_{lam^T} in the dual Grassmannian, q-degrees kept.
QClass dual_transpose(const QClass& a);
// sigma_lam -> sigma of the rotated box complement, same Grassmannian.
QClass dual_complement(const QClass& a);
// q^d sigma_lam -> q^{-d-diag(lam)} sigma_{mu}, mu from the reversed 01-word
// halves; an involution.
QClass strange_duality(const QClass& a);

}  // namespace qhgr
