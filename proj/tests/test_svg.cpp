#include "doctest.h"

#include "qhgr/enumerate.hpp"
#include "qhgr/roots.hpp"
#include "qhgr/svg.hpp"

using namespace qhgr;

namespace {
size_t count_sub(const std::string& hay, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}
}  // namespace

TEST_CASE("fundamental alcove only at radius zero") {
    std::string svg = alcove_svg(3, 0, AlcoveHighlight::grassmannian);
    CHECK(count_sub(svg, "<polygon") == 1);
    CHECK(svg.find(">e</text>") != std::string::npos);
}

TEST_CASE("alcove count matches the group ball") {
    for (i64 radius : {1, 2, 4})
        CHECK(count_sub(alcove_svg(3, radius, AlcoveHighlight::grassmannian), "<polygon") ==
              elements_up_to_length(3, radius).size());
}

TEST_CASE("coloring follows the predicates") {
    const i64 radius = 6;
    auto all = elements_up_to_length(3, radius);
    for (i64 m = 1; m <= 2; ++m) {
        size_t want = 0;
        for (const auto& w : all)
            if (is_in_SnP(w, m)) ++want;
        CHECK(count_sub(alcove_svg(3, radius, AlcoveHighlight::coset_set, m), "#f4b6c2") == want);
    }
    size_t grass = 0;
    for (const auto& w : all)
        if (is_grassmannian(w)) ++grass;
    CHECK(count_sub(alcove_svg(3, radius, AlcoveHighlight::grassmannian), "#b8cdf5") == grass);
}

TEST_CASE("only rank three draws") {
    CHECK_THROWS_AS(alcove_svg(4, 2, AlcoveHighlight::grassmannian), std::invalid_argument);
    CHECK_THROWS_AS(alcove_svg(3, -1, AlcoveHighlight::grassmannian), std::invalid_argument);
    CHECK_THROWS_AS(alcove_svg(3, 2, AlcoveHighlight::coset_set, 3), std::invalid_argument);
}
