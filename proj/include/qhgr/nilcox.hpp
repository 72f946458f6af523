#pragma once

#include "qhgr/affine.hpp"
#include "qhgr/shapes.hpp"

#include <map>
#include <string>

namespace qhgr {

// Integer span of basis elements A_w; A_v A_w = A_{vw} when lengths add, else 0.
struct NilCoxElem {
    i64 n = 0;
    std::map<AffinePermutation, i64> terms;  // no zero coefficients stored
    bool operator==(const NilCoxElem&) const = default;
};

NilCoxElem nc_zero(i64 n);
NilCoxElem nc_one(i64 n);  // A_identity
NilCoxElem nc_term(const AffinePermutation& w, i64 coeff = 1);
NilCoxElem nc_add(const NilCoxElem& a, const NilCoxElem& b);
NilCoxElem nc_sub(const NilCoxElem& a, const NilCoxElem& b);
NilCoxElem nc_scale(const NilCoxElem& a, i64 c);
NilCoxElem nc_multiply(const NilCoxElem& a, const NilCoxElem& b);

// Paper-style rendering: "A_{210}+A_{321}+..."; the identity term prints as "1".
std::string nc_to_string(const NilCoxElem& a);

// Polynomial in commuting h_1..h_k; monomial keys are weakly decreasing.
struct HPolynomial {
    std::map<std::vector<i64>, i64> terms;
    bool operator==(const HPolynomial&) const = default;
};

HPolynomial hp_zero();
HPolynomial hp_one();
HPolynomial hp_h(i64 r);
HPolynomial hp_add(const HPolynomial& a, const HPolynomial& b);
HPolynomial hp_sub(const HPolynomial& a, const HPolynomial& b);
HPolynomial hp_mul(const HPolynomial& a, const HPolynomial& b);
std::string hp_to_string(const HPolynomial& a);

// Sums over cyclically decreasing / increasing length-r elements, C(n,r) terms.
NilCoxElem htilde(i64 n, i64 r);
NilCoxElem etilde(i64 n, i64 r);

// All nu such that nu/lam is a horizontal r-strip and the conjugate-in-core
// skew is a vertical r-strip; parts stay below n.
std::vector<Partition> weak_pieri(i64 n, i64 r, const Partition& lam);

HPolynomial kschur_h_poly(i64 n, const Partition& lam);
NilCoxElem noncomm_kschur(i64 n, const Partition& lam);

// Coefficients on the increasing-window terms of elem; checks that these
// reproduce elem as a combination of noncomm_kschur values.
std::map<AffinePermutation, i64> j_expand(const NilCoxElem& elem);

// Drop all memoized expansions (between unrelated parameter blocks).
void clear_nilcox_caches();

}  // namespace qhgr
