#pragma once

#include "qhgr/affine.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <vector>

namespace qhgr::oracles {

// Breadth-first walk of the right Cayley graph from the identity.  The BFS
// depth of a window is an independent check on the inversion-count length
// formula, and the keys enumerate all elements of length <= max_len.
inline std::map<std::vector<i64>, i64> bfs_lengths(i64 n, i64 max_len) {
    std::map<std::vector<i64>, i64> dist;
    std::vector<AffinePermutation> frontier{AffinePermutation(n)};
    dist[frontier.front().window()] = 0;
    for (i64 d = 1; d <= max_len; ++d) {
        std::vector<AffinePermutation> next;
        for (const auto& w : frontier) {
            for (i64 t = 0; t < n; ++t) {
                auto v = w.apply_right(t);
                if (dist.emplace(v.window(), d).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

// Exhaustive search over all reduced words of w for a consecutive factor
// (t, t+-1 mod n, t).  Words are peeled from the right end; the pair (a, b)
// holds the last two peeled letters, so a new peel t completes the word
// triple (t, a, b) and a braid is t == b with a cyclically adjacent to t.
inline bool braid_word_exists(const AffinePermutation& w) {
    i64 n = w.rank();
    std::map<std::tuple<std::vector<i64>, i64, i64>, bool> memo;
    std::function<bool(const AffinePermutation&, i64, i64)> go =
        [&](const AffinePermutation& cur, i64 a, i64 b) -> bool {
        if (cur.is_identity()) return false;
        auto key = std::make_tuple(cur.window(), a, b);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool found = false;
        for (i64 t = 0; t < n && !found; ++t) {
            if (!cur.right_descent(t)) continue;
            bool adjacent = a >= 0 && (pos_mod(a - t, n) == 1 || pos_mod(t - a, n) == 1);
            if (t == b && adjacent) found = true;
            else found = go(cur.apply_right(t), t, a);
        }
        memo[key] = found;
        return found;
    };
    return go(w, -1, -1);
}

}  // namespace qhgr::oracles
