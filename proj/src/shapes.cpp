#include "qhgr/shapes.hpp"

#include <algorithm>
#include <numeric>

namespace qhgr {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

void require_partition(const Partition& p) {
    require(is_partition(p), "parts must be positive and weakly decreasing");
}

i64 partition_size(const Partition& p) {
    i64 s = 0;
    for (i64 x : p) s = checked_add(s, x);
    return s;
}

i64 partition_part(const Partition& p, i64 row) {
    return (row >= 1 && row <= (i64)p.size()) ? p[row - 1] : 0;
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(p[0]);
    for (i64 c = 1; c <= p[0]; ++c)
        q[c - 1] = std::count_if(p.begin(), p.end(), [c](i64 x) { return x >= c; });
    return q;
}

bool fits_in_box(const Partition& p, i64 rows, i64 cols) {
    if ((i64)p.size() > rows) return false;
    return p.empty() || p[0] <= cols;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

i64 diagonal_boxes(const Partition& p) {
    i64 d = 0;
    while (d < (i64)p.size() && p[d] >= d + 1) ++d;
    return d;
}

std::vector<std::vector<i64>> hook_lengths(const Partition& p) {
    require_partition(p);
    Partition pc = conjugate(p);
    std::vector<std::vector<i64>> h(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        h[i].resize(p[i]);
        for (i64 j = 1; j <= p[i]; ++j) h[i][j - 1] = (p[i] - j) + (pc[j - 1] - (i64)(i + 1)) + 1;
    }
    return h;
}

namespace {

// Corner lists as (row, col), 1-indexed, top to bottom.
std::vector<std::pair<i64, i64>> addable_corners(const Partition& p) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 r = 1; r <= (i64)p.size() + 1; ++r) {
        i64 c = partition_part(p, r) + 1;
        if (r == 1 || partition_part(p, r - 1) >= c) out.emplace_back(r, c);
    }
    return out;
}

std::vector<std::pair<i64, i64>> removable_corners(const Partition& p) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 r = 1; r <= (i64)p.size(); ++r) {
        i64 c = p[r - 1];
        if (c >= 1 && partition_part(p, r + 1) < c) out.emplace_back(r, c);
    }
    return out;
}

i64 box_residue(i64 n, i64 r, i64 c) { return pos_mod(c - r, n); }

}  // namespace

bool is_core(i64 n, const Partition& p) {
    require(n >= 2, "rank must be at least 2");
    if (!is_partition(p)) return false;
    for (const auto& row : hook_lengths(p))
        for (i64 h : row)
            if (h % n == 0) return false;
    return true;
}

Partition kbounded_to_core(i64 n, const Partition& lambda) {
    require(n >= 2, "rank must be at least 2");
    require_partition(lambda);
    i64 k = n - 1;
    require(lambda.empty() || lambda[0] <= k, "parts must be at most n-1");
    i64 rows = lambda.size();
    Partition core(rows, 0);
    // Bottom row up: slide each row right until every one of its boxes has
    // hook at most k against the rows already placed below it.
    i64 offset_below = 0;
    for (i64 i = rows; i >= 1; --i) {
        i64 off = offset_below;
        for (;; ++off) {
            bool ok = true;
            for (i64 j = off + 1; j <= off + lambda[i - 1] && ok; ++j) {
                i64 arm = off + lambda[i - 1] - j;
                i64 leg = 0;
                for (i64 r = i + 1; r <= rows; ++r)
                    if (core[r - 1] >= j) ++leg;
                ok = arm + leg + 1 <= k;
            }
            if (ok) break;
        }
        core[i - 1] = off + lambda[i - 1];
        offset_below = off;
    }
    return trim(std::move(core));
}

Partition core_to_kbounded(i64 n, const Partition& core) {
    require(is_core(n, core), "input has a hook divisible by n");
    Partition lambda(core.size(), 0);
    auto hooks = hook_lengths(core);
    for (size_t i = 0; i < core.size(); ++i)
        lambda[i] = std::count_if(hooks[i].begin(), hooks[i].end(), [n](i64 h) { return h < n; });
    return trim(std::move(lambda));
}

Partition word_to_core(const Word& word) {
    i64 n = word.n;
    require(n >= 2, "rank must be at least 2");
    Partition p;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        i64 i = *it;
        require(i >= 0 && i < n, "letter out of range");
        for (auto [r, c] : removable_corners(p))
            require(box_residue(n, r, c) != i, "letter removes boxes, word does not increase");
        std::vector<i64> add_rows;
        for (auto [r, c] : addable_corners(p))
            if (box_residue(n, r, c) == i) add_rows.push_back(r);
        require(!add_rows.empty(), "letter fixes the shape, word is not reduced");
        for (i64 r : add_rows) {
            if (r <= (i64)p.size()) p[r - 1] += 1;
            else p.push_back(1);
        }
    }
    return p;
}

Word core_to_word(i64 n, const Partition& core) {
    require(is_core(n, core), "input has a hook divisible by n");
    Word out{n, {}};
    Partition p = core;
    while (!p.empty()) {
        auto rem = removable_corners(p);
        auto add = addable_corners(p);
        i64 chosen = -1;
        for (i64 i = 0; i < n && chosen < 0; ++i) {
            bool has_rem = false, has_add = false;
            for (auto [r, c] : rem) has_rem |= box_residue(n, r, c) == i;
            for (auto [r, c] : add) has_add |= box_residue(n, r, c) == i;
            if (has_rem && !has_add) chosen = i;
        }
        require(chosen >= 0, "shape admits no descent, not reachable by the generator action");
        for (auto [r, c] : rem)
            if (box_residue(n, r, c) == chosen) p[r - 1] -= 1;
        p = trim(std::move(p));
        out.letters.push_back(chosen);
    }
    return out;
}

Partition kconjugate(i64 n, const Partition& lambda) {
    return core_to_kbounded(n, conjugate(kbounded_to_core(n, lambda)));
}

Partition grassmannian_to_kbounded(const AffinePermutation& w) {
    require(w.is_grassmannian(), "window must be increasing");
    return core_to_kbounded(w.rank(), word_to_core(reduced_word(w)));
}

AffinePermutation kbounded_to_grassmannian(i64 n, const Partition& lambda) {
    return from_word(core_to_word(n, kbounded_to_core(n, lambda)));
}

AffinePermutation shape_to_perm(i64 m, i64 n, const Partition& shape) {
    require(m >= 1 && m < n, "cut position must satisfy 1 <= m <= n-1");
    require_partition(shape);
    require(fits_in_box(shape, m, n - m), "shape exceeds the m x (n-m) box");
    std::vector<i64> w(n);
    std::vector<bool> used(n + 1, false);
    for (i64 i = 1; i <= m; ++i) {
        w[i - 1] = partition_part(shape, m + 1 - i) + i;
        used[w[i - 1]] = true;
    }
    i64 pos = m;
    for (i64 v = 1; v <= n; ++v)
        if (!used[v]) w[pos++] = v;
    return AffinePermutation(n, std::move(w));
}

Partition perm_to_shape(i64 m, i64 n, const AffinePermutation& w) {
    require(w.rank() == n, "rank mismatch");
    require(w.is_single_descent_at(m), "window must increase on each side of the cut");
    Partition shape(m);
    for (i64 j = 1; j <= m; ++j) shape[j - 1] = w(m + 1 - j) - (m + 1 - j);
    return trim(std::move(shape));
}

std::vector<int> shape_to_bits(i64 m, i64 n, const Partition& shape) {
    auto w = shape_to_perm(m, n, shape);
    std::vector<int> bits(n, 0);
    for (i64 i = 1; i <= m; ++i) bits[w(i) - 1] = 1;
    return bits;
}

Partition bits_to_shape(i64 m, i64 n, const std::vector<int>& bits) {
    require((i64)bits.size() == n, "01-word length must equal n");
    std::vector<i64> w;
    w.reserve(n);
    for (i64 v = 1; v <= n; ++v)
        if (bits[v - 1] == 1) w.push_back(v);
    require((i64)w.size() == m, "01-word must have exactly m ones");
    for (i64 v = 1; v <= n; ++v)
        if (bits[v - 1] == 0) w.push_back(v);
    return perm_to_shape(m, n, AffinePermutation(n, std::move(w)));
}

Partition transpose_shape(i64 m, i64 n, const Partition& shape) {
    require(fits_in_box(shape, m, n - m), "shape exceeds the m x (n-m) box");
    return conjugate(shape);
}

Partition complement_shape(i64 m, i64 n, const Partition& shape) {
    require(fits_in_box(shape, m, n - m), "shape exceeds the m x (n-m) box");
    Partition out(m);
    for (i64 i = 0; i < m; ++i) out[i] = (n - m) - partition_part(shape, m - i);
    return trim(std::move(out));
}

StrangeDual strange_dual(i64 m, i64 n, const Partition& shape) {
    auto bits = shape_to_bits(m, n, shape);
    std::reverse(bits.begin(), bits.begin() + m);
    std::reverse(bits.begin() + m, bits.end());
    return {bits_to_shape(m, n, bits), diagonal_boxes(shape)};
}

std::vector<RimHookRemoval> rim_hook_removals(i64 n, const Partition& shape) {
    require(n >= 1, "strip length must be positive");
    require_partition(shape);
    std::vector<RimHookRemoval> out;
    auto hooks = hook_lengths(shape);
    for (i64 a = 1; a <= (i64)shape.size(); ++a) {
        for (i64 b = 1; b <= shape[a - 1]; ++b) {
            if (hooks[a - 1][b - 1] != n) continue;
            // Strip of the hook at (a,b): every box (i,j) weakly south-east of
            // (a,b) whose south-east neighbour is outside the shape.
            i64 last = a;
            while (last < (i64)shape.size() && shape[last] >= b) ++last;
            Partition res = shape;
            for (i64 i = a; i <= last; ++i) res[i - 1] = std::max(partition_part(shape, i + 1), b) - 1;
            i64 removed = partition_size(shape) - partition_size(res);
            require(removed == n, "strip size mismatch");
            out.push_back({trim(std::move(res)), last - a + 1});
        }
    }
    return out;
}

}  // namespace qhgr
