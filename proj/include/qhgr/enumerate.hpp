#pragma once

#include "qhgr/affine.hpp"
#include "qhgr/shapes.hpp"

#include <vector>

namespace qhgr {

// All shapes inside a rows x cols box, including the empty one.
std::vector<Partition> partitions_in_box(i64 rows, i64 cols);

// All partitions with every part <= max_part and total size <= max_size.
std::vector<Partition> partitions_bounded(i64 max_part, i64 max_size);

// All group elements of length <= max_len, by breadth-first search.
std::vector<AffinePermutation> elements_up_to_length(i64 n, i64 max_len);

std::vector<AffinePermutation> grassmannians_up_to_length(i64 n, i64 max_len);

}  // namespace qhgr
