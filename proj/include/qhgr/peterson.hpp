#pragma once

#include "qhgr/nilcox.hpp"
#include "qhgr/quantum.hpp"
#include "qhgr/roots.hpp"

#include <string>
#include <vector>

namespace qhgr {

// Fixed box parameters plus the distinguished length-n hook element u whose
// powers carry the q-grading on the affine side.
struct PetersonContext {
    i64 m = 0;
    i64 n = 0;
    i64 k = 0;  // n - 1
    AffinePermutation u;
    PetersonContext(i64 m_, i64 n_);
};

struct Lift {
    AffinePermutation w;
    i64 r = 0;
};

// Minimal r >= 0 such that shape_to_perm(lam) * u^r has an increasing window.
Lift lift(const PetersonContext& ctx, const Partition& lam);

// j-expand, drop indices outside the parabolic coset set, factor survivors as
// v*u^r, and collect coeff * q^{-r} * sigma_{shape(v)}.  The input must be
// length-homogeneous and must lie in the span of the j-basis.
QClass psi(const PetersonContext& ctx, const NilCoxElem& elem);

// Quantum product by the affine route: lift both shapes, multiply their
// noncommutative Schur expansions, push through psi, clear q-denominators.
// When trace is given, appends one JSON object per pipeline stage.
QClass peterson_product(const PetersonContext& ctx, const Partition& lam, const Partition& mu,
                        std::vector<std::string>* trace = nullptr);

struct GeneratorReport {
    struct Entry {
        std::string name;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

// Runs each generator through transpose-dual . q-inverting-dual . psi and
// compares with the row class sigma_(r) (cut at r = m), the column class
// sigma_(1^r) (cut at r = n-m), and q for the central product e_{n-m} h_m.
GeneratorReport modpet_check(const PetersonContext& ctx);

}  // namespace qhgr
