#pragma once

#include "qhgr/affine.hpp"
#include "qhgr/base.hpp"

#include <compare>
#include <vector>

namespace qhgr {

// e_i - e_j + p*delta with 1 <= i,j <= n, i != j.
struct AffineRoot {
    i64 i = 1;
    i64 j = 2;
    i64 p = 0;
    auto operator<=>(const AffineRoot&) const = default;
};

// Positive iff p > 0, or p = 0 and i < j.
bool is_positive(const AffineRoot& a);

AffineRoot simple_root(i64 n, i64 t);  // alpha_t; alpha_0 = -theta + delta
AffineRoot highest_root(i64 n);        // theta = e_1 - e_n
AffineRoot bar(const AffineRoot& a);   // drop the delta part

// Coefficients (c_1, ..., c_{n-1}, c_delta) of a on alpha_1..alpha_{n-1}, delta.
std::vector<i64> simple_coefficients(i64 n, const AffineRoot& a);

// Level-zero action of the group on affine roots.
AffineRoot act(const AffinePermutation& w, const AffineRoot& beta);

// { alpha positive : w . alpha negative }; has exactly length(w) elements.
std::vector<AffineRoot> inversions(const AffinePermutation& w);

// Membership in the superregular-free coset test: for every level-zero
// positive root alpha with both indices on one side of the cut at m,
// w . alpha lies in R^+ or in R^- + delta.
bool is_in_SnP(const AffinePermutation& w, i64 m);

// True iff the window contains a 321 pattern, i.e. some reduced word of w
// contains a factor s_t s_{t+-1} s_t.
bool supports_braid(const AffinePermutation& w);

// Dominance on the root lattice (weakly decreasing / increasing entries).
bool is_dominant(const std::vector<i64>& lambda);
bool is_antidominant(const std::vector<i64>& lambda);

}  // namespace qhgr
