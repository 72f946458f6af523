#pragma once

#include "qhgr/affine.hpp"
#include "qhgr/base.hpp"

#include <utility>
#include <vector>

namespace qhgr {

// Weakly decreasing positive parts; the empty vector is the empty shape.
using Partition = std::vector<i64>;

bool is_partition(const Partition& p);
void require_partition(const Partition& p);
i64 partition_size(const Partition& p);
i64 partition_part(const Partition& p, i64 row);  // 1-indexed, 0 past the end
Partition conjugate(const Partition& p);
bool fits_in_box(const Partition& p, i64 rows, i64 cols);
bool contains(const Partition& outer, const Partition& inner);
Partition trim(Partition p);  // drop trailing zeros

i64 diagonal_boxes(const Partition& p);  // #{i : p_i >= i}

std::vector<std::vector<i64>> hook_lengths(const Partition& p);

// Partitions with all parts <= n-1  <->  partitions with no hook of length n.
Partition kbounded_to_core(i64 n, const Partition& lambda);
Partition core_to_kbounded(i64 n, const Partition& core);
bool is_core(i64 n, const Partition& p);

// The generator action on cores: letter i adds every box of residue i
// (residue of (r,c) is (c-r) mod n).  Words here are reduced words of
// affine permutations with increasing windows.
Partition word_to_core(const Word& word);
Word core_to_word(i64 n, const Partition& core);

Partition kconjugate(i64 n, const Partition& lambda);

Partition grassmannian_to_kbounded(const AffinePermutation& w);
AffinePermutation kbounded_to_grassmannian(i64 n, const Partition& lambda);

// Shapes inside the m x (n-m) box <-> permutations of [1,n] whose window
// increases on each side of position m.
AffinePermutation shape_to_perm(i64 m, i64 n, const Partition& shape);
Partition perm_to_shape(i64 m, i64 n, const AffinePermutation& w);

// 01-word of length n: bit j is 1 when j lands in the first m window slots.
std::vector<int> shape_to_bits(i64 m, i64 n, const Partition& shape);
Partition bits_to_shape(i64 m, i64 n, const std::vector<int>& bits);

Partition transpose_shape(i64 m, i64 n, const Partition& shape);   // into the (n-m) x m box
Partition complement_shape(i64 m, i64 n, const Partition& shape);

struct StrangeDual {
    Partition shape;
    i64 diag;
};
// Reverse the first m bits and the last n-m bits of the 01-word; diag counts
// main-diagonal boxes of the input shape.
StrangeDual strange_dual(i64 m, i64 n, const Partition& shape);

struct RimHookRemoval {
    Partition shape;
    i64 height;  // rows the removed strip spans
};
// All ways to peel a single length-n border strip.
std::vector<RimHookRemoval> rim_hook_removals(i64 n, const Partition& shape);

}  // namespace qhgr
