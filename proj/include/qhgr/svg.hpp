#pragma once

#include "qhgr/affine.hpp"

#include <string>

namespace qhgr {

enum class AlcoveHighlight { coset_set, grassmannian };

// Rank-3 alcove picture: equilateral triangles labeled by reduced words,
// one per element of length at most radius.  coset_set coloring marks
// membership in the parabolic coset set for the given m; grassmannian
// coloring marks increasing windows (m ignored).
std::string alcove_svg(i64 n, i64 radius, AlcoveHighlight highlight, i64 m = 1);

}  // namespace qhgr
