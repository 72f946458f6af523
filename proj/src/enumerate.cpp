#include "qhgr/enumerate.hpp"

#include <set>

namespace qhgr {

namespace {

void fill_box(std::vector<Partition>& out, Partition& cur, i64 rows, i64 cols) {
    out.push_back(cur);
    if ((i64)cur.size() == rows) return;
    i64 cap = cur.empty() ? cols : cur.back();
    for (i64 part = cap; part >= 1; --part) {
        cur.push_back(part);
        fill_box(out, cur, rows, cols);
        cur.pop_back();
    }
}

void fill_bounded(std::vector<Partition>& out, Partition& cur, i64 max_part, i64 left) {
    out.push_back(cur);
    i64 cap = std::min(max_part, cur.empty() ? left : cur.back());
    for (i64 part = std::min(cap, left); part >= 1; --part) {
        cur.push_back(part);
        fill_bounded(out, cur, max_part, left - part);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(i64 rows, i64 cols) {
    std::vector<Partition> out;
    Partition cur;
    fill_box(out, cur, rows, cols);
    return out;
}

std::vector<Partition> partitions_bounded(i64 max_part, i64 max_size) {
    std::vector<Partition> out;
    Partition cur;
    fill_bounded(out, cur, max_part, max_size);
    return out;
}

std::vector<AffinePermutation> elements_up_to_length(i64 n, i64 max_len) {
    std::set<std::vector<i64>> seen;
    std::vector<AffinePermutation> out{AffinePermutation(n)};
    seen.insert(out.front().window());
    size_t frontier_begin = 0;
    for (i64 d = 1; d <= max_len; ++d) {
        size_t frontier_end = out.size();
        for (size_t idx = frontier_begin; idx < frontier_end; ++idx) {
            for (i64 t = 0; t < n; ++t) {
                auto v = out[idx].apply_right(t);
                if (seen.insert(v.window()).second) out.push_back(v);
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

std::vector<AffinePermutation> grassmannians_up_to_length(i64 n, i64 max_len) {
    std::vector<AffinePermutation> out;
    for (const auto& w : elements_up_to_length(n, max_len))
        if (w.is_grassmannian()) out.push_back(w);
    return out;
}

}  // namespace qhgr
