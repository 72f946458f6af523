#include "qhgr/affine.hpp"

#include <algorithm>
#include <numeric>

namespace qhgr {

AffinePermutation::AffinePermutation(i64 n) : n_(n) {
    require(n >= 2, "rank must be at least 2");
    w_.resize(n);
    std::iota(w_.begin(), w_.end(), i64{1});
}

AffinePermutation::AffinePermutation(i64 n, std::vector<i64> window) : n_(n), w_(std::move(window)) {
    require(n >= 2, "rank must be at least 2");
    require((i64)w_.size() == n, "window size must equal rank");
    i64 sum = 0;
    std::vector<bool> seen(n, false);
    for (i64 x : w_) {
        sum = checked_add(sum, x);
        i64 r = pos_mod(x, n);
        require(!seen[r], "window residues must be pairwise distinct mod n");
        seen[r] = true;
    }
    require(sum == n * (n + 1) / 2, "window entries must sum to n(n+1)/2");
}

AffinePermutation AffinePermutation::unchecked(i64 n, std::vector<i64> w) {
    AffinePermutation p;
    p.n_ = n;
    p.w_ = std::move(w);
    return p;
}

i64 AffinePermutation::operator()(i64 i) const {
    i64 r = pos_mod(i - 1, n_);            // in [0, n)
    i64 shift = floor_div(i - 1, n_);      // i = r+1 + shift*n
    return checked_add(w_[r], checked_mul(shift, n_));
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& v) const {
    require(n_ == v.n_, "rank mismatch");
    std::vector<i64> w(n_);
    for (i64 i = 0; i < n_; ++i) w[i] = (*this)(v.w_[i]);
    return unchecked(n_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
    std::vector<i64> w(n_);
    for (i64 j = 0; j < n_; ++j) {
        // w maps position j+1 to w_[j]; the inverse sends the residue class
        // of w_[j] back, shifted so that value w_[j] -> j+1.
        i64 r = pos_mod(w_[j] - 1, n_);
        i64 shift = floor_div(w_[j] - 1, n_);
        w[r] = checked_sub(j + 1, checked_mul(shift, n_));
    }
    return unchecked(n_, std::move(w));
}

AffinePermutation AffinePermutation::pow(i64 e) const {
    AffinePermutation base = e >= 0 ? *this : inverse();
    i64 k = e >= 0 ? e : -e;
    AffinePermutation acc(n_);
    for (i64 i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

AffinePermutation AffinePermutation::apply_right(i64 t) const {
    require(t >= 0 && t < n_, "generator index out of range");
    std::vector<i64> w = w_;
    if (t == 0) {
        w[0] = checked_sub(w_[n_ - 1], n_);
        w[n_ - 1] = checked_add(w_[0], n_);
    } else {
        std::swap(w[t - 1], w[t]);
    }
    return unchecked(n_, std::move(w));
}

AffinePermutation AffinePermutation::apply_left(i64 t) const {
    require(t >= 0 && t < n_, "generator index out of range");
    std::vector<i64> w = w_;
    for (i64& x : w) {
        i64 r = pos_mod(x, n_);
        if (r == pos_mod(t, n_)) x = checked_add(x, 1);
        else if (r == pos_mod(t + 1, n_)) x = checked_sub(x, 1);
    }
    return unchecked(n_, std::move(w));
}

bool AffinePermutation::right_descent(i64 t) const {
    require(t >= 0 && t < n_, "generator index out of range");
    if (t == 0) return w_[n_ - 1] - n_ > w_[0];
    return w_[t - 1] > w_[t];
}

bool AffinePermutation::left_descent(i64 t) const {
    // s_t w < w  <=>  the value t+1 appears after the value t... cheapest is
    // via the inverse's right descent.
    return inverse().right_descent(t);
}

bool AffinePermutation::is_identity() const {
    for (i64 i = 0; i < n_; ++i)
        if (w_[i] != i + 1) return false;
    return true;
}

bool AffinePermutation::is_grassmannian() const {
    // Window entries are pairwise distinct, so sorted means strictly increasing.
    return std::is_sorted(w_.begin(), w_.end());
}

bool AffinePermutation::is_finite() const {
    for (i64 x : w_)
        if (x < 1 || x > n_) return false;
    return true;
}

bool AffinePermutation::is_single_descent_at(i64 m) const {
    if (!is_finite()) return false;
    for (i64 i = 1; i < n_; ++i)
        if (w_[i - 1] > w_[i] && i != m) return false;
    return true;
}

i64 AffinePermutation::length() const {
    i64 len = 0;
    for (i64 i = 0; i < n_; ++i)
        for (i64 j = i + 1; j < n_; ++j) {
            i64 d = floor_div(checked_sub(w_[j], w_[i]), n_);
            len = checked_add(len, d < 0 ? -d : d);
        }
    return len;
}

AffinePermutation from_word(i64 n, const std::vector<i64>& letters) {
    AffinePermutation w(n);
    for (i64 t : letters) w = w.apply_right(t);
    return w;
}

AffinePermutation from_word(const Word& word) { return from_word(word.n, word.letters); }

Word reduced_word(const AffinePermutation& w) {
    Word out{w.rank(), {}};
    AffinePermutation cur = w;
    while (!cur.is_identity()) {
        i64 d = -1;
        for (i64 t = 0; t < cur.rank(); ++t)
            if (cur.right_descent(t)) { d = t; break; }
        out.letters.push_back(d);
        cur = cur.apply_right(d);
    }
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

AffinePermutation translation(i64 n, const std::vector<i64>& lambda) {
    require((i64)lambda.size() == n, "lattice vector size must equal rank");
    i64 sum = 0;
    for (i64 x : lambda) sum = checked_add(sum, x);
    require(sum == 0, "lattice vector must sum to zero");
    std::vector<i64> w(n);
    for (i64 i = 0; i < n; ++i) w[i] = checked_add(i + 1, checked_mul(n, lambda[i]));
    return AffinePermutation(n, std::move(w));
}

AffinePermutation u_element(i64 n, i64 m) {
    require(m >= 1 && m < n, "cut position must satisfy 1 <= m <= n-1");
    std::vector<i64> letters;
    for (i64 t = m; t < n; ++t) letters.push_back(t);      // m,...,n-1
    for (i64 t = m - 1; t >= 0; --t) letters.push_back(t); // m-1,...,1,0
    return from_word(n, letters);
}

VURFactorization factor_vur(const AffinePermutation& w, i64 m) {
    AffinePermutation uinv = u_element(w.rank(), m).inverse();
    i64 cap = w.length() + 1;
    AffinePermutation cur = w;
    for (i64 r = 0; r <= cap; ++r) {
        if (cur.is_finite()) {
            require(cur.is_single_descent_at(m),
                    "finite factor is not a minimal coset representative");
            return {cur, r};
        }
        cur = cur * uinv;
    }
    fail("no factorization w = v*u^r with finite v found");
}

}  // namespace qhgr
