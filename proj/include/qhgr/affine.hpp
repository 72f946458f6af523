#pragma once

// The affine symmetric group ~S_n in window notation, together with the
// translation elements t_lambda and the v*u^r factorization used by the
// Peterson map.
//
// An element is the window (w(1),...,w(n)); it extends to a bijection of Z
// by w(i+n) = w(i)+n.  Valid windows have pairwise distinct residues mod n
// and entry sum n(n+1)/2.

#include <vector>

#include "qhgr/base.hpp"

namespace qhgr {

struct Word {
    i64 n = 0;
    std::vector<i64> letters;  // each in [0, n)

    bool operator==(const Word&) const = default;
};

class AffinePermutation {
public:
    explicit AffinePermutation(i64 n);                  // identity
    AffinePermutation(i64 n, std::vector<i64> window);  // validates

    i64 rank() const { return n_; }
    const std::vector<i64>& window() const { return w_; }

    // Value at any integer, via the periodic extension.
    i64 operator()(i64 i) const;

    AffinePermutation operator*(const AffinePermutation& v) const;  // (u*v)(i) = u(v(i))
    AffinePermutation inverse() const;
    AffinePermutation pow(i64 e) const;  // e may be negative

    // Right product with s_t, t in [0, n): swaps window positions t, t+1
    // (position 0 meaning the periodic wrap).
    AffinePermutation apply_right(i64 t) const;
    // Left product with s_t: swaps the values congruent to t, t+1 mod n.
    AffinePermutation apply_left(i64 t) const;

    // ws_t < w.  For t >= 1 this is w(t) > w(t+1); for t = 0, w(0) > w(1).
    bool right_descent(i64 t) const;
    bool left_descent(i64 t) const;

    bool is_identity() const;
    // Window strictly increasing <=> minimal in its coset of ~S_n / S_n.
    bool is_grassmannian() const;
    // Window contained in [1, n], i.e. the element lies in the finite S_n.
    bool is_finite() const;
    // Finite with no descent except possibly at position m.
    bool is_single_descent_at(i64 m) const;

    // Coxeter length = sum over 1 <= i < j <= n of |floor((w(j)-w(i))/n)|.
    i64 length() const;

    auto operator<=>(const AffinePermutation&) const = default;

private:
    i64 n_;
    std::vector<i64> w_;
    AffinePermutation() : n_(0) {}  // trusted internals only
    static AffinePermutation unchecked(i64 n, std::vector<i64> w);
    friend AffinePermutation product_of(const AffinePermutation&, const AffinePermutation&);
};

AffinePermutation from_word(const Word& word);
AffinePermutation from_word(i64 n, const std::vector<i64>& letters);

inline AffinePermutation multiply(const AffinePermutation& u, const AffinePermutation& v) {
    return u * v;
}
inline i64 length(const AffinePermutation& w) { return w.length(); }
inline bool is_grassmannian(const AffinePermutation& w) { return w.is_grassmannian(); }

// Reduced word obtained by repeatedly peeling the smallest-index right
// descent; from_word(reduced_word(w)) == w.
Word reduced_word(const AffinePermutation& w);

// t_lambda for lambda in the root lattice (coordinates summing to zero):
// window i + n*lambda_i.  Group embedding: t_lambda t_mu = t_{lambda+mu}.
AffinePermutation translation(i64 n, const std::vector<i64>& lambda);

// u = pi_P(t_{-theta}) = s_{m,m+1,...,n-1,m-1,...,1,0}; Grassmannian of
// length n.
AffinePermutation u_element(i64 n, i64 m);

struct VURFactorization {
    AffinePermutation v;  // finite, single descent at m (or identity)
    i64 r;
};

// Unique factorization w = v * u^r with v finite.  Searches r = 0,1,2,...
// computing w * u^{-r} until the window lies in [1,n]; gives up past
// length(w)+1.  Caller guarantees w Grassmannian and in ~S_n^P.
VURFactorization factor_vur(const AffinePermutation& w, i64 m);

}  // namespace qhgr
