#pragma once

#include "qhgr/nilcox.hpp"
#include "qhgr/peterson.hpp"
#include "qhgr/roots.hpp"

namespace qhgr {

// Quotient of the nilCoxeter algebra killing every braid word; surviving
// basis indices are the fully commutative affine permutations.
struct NilTLElem {
    i64 n = 0;
    std::map<AffinePermutation, i64> terms;  // no zero coefficients stored
    bool operator==(const NilTLElem&) const = default;
};

NilTLElem ntl_zero(i64 n);
NilTLElem ntl_one(i64 n);
NilTLElem ntl_add(const NilTLElem& a, const NilTLElem& b);
NilTLElem ntl_sub(const NilTLElem& a, const NilTLElem& b);
NilTLElem ntl_scale(const NilTLElem& a, i64 c);

// Quotient map: drops every term whose index supports a braid.
NilTLElem project(const NilCoxElem& elem);

// Multiply by lifting to the nilCoxeter algebra and projecting back.
NilTLElem ntl_multiply(const NilTLElem& a, const NilTLElem& b);

// Expands (1 + sum e_i t^i)(1 + sum h_j (-t)^j) in the quotient, degree by
// degree: coefficients of t^1..t^{n-1} must vanish and the t^n coefficient
// must equal the alternating sum of the central products e_m h_{n-m}.
bool verify_eheq(i64 n);

// Generator-level consistency of the quotient presentation with the
// corrected Peterson composite: single generators, the central element, and
// all products of generator pairs, each compared against the declared
// quantum classes in the dual Grassmannian.
GeneratorReport postnikov_generator_check(i64 m, i64 n);

}  // namespace qhgr
