#include "qhgr/svg.hpp"

#include "qhgr/roots.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace qhgr {

namespace {

struct Vec2 {
    double x = 0, y = 0;
};

Vec2 reflect_across(const Vec2& p, const Vec2& a, const Vec2& b) {
    double dx = b.x - a.x, dy = b.y - a.y;
    double len = std::sqrt(dx * dx + dy * dy);
    dx /= len;
    dy /= len;
    double vx = p.x - a.x, vy = p.y - a.y;
    double dot = vx * dx + vy * dy;
    return Vec2{a.x + 2 * dot * dx - vx, a.y + 2 * dot * dy - vy};
}

// vertices indexed by the wall type they sit opposite
struct Alcove {
    AffinePermutation w;
    std::array<Vec2, 3> v;
};

std::string fmt(double value) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << value;
    return os.str();
}

}  // namespace

std::string alcove_svg(i64 n, i64 radius, AlcoveHighlight highlight, i64 m) {
    require(n == 3, "alcove picture: only rank 3 has a planar diagram");
    require(radius >= 0, "alcove picture: radius must be nonnegative");
    if (highlight == AlcoveHighlight::coset_set)
        require(m >= 1 && m < n, "alcove picture: need 1 <= m < n");

    // fundamental alcove in the sum-zero plane, projected so sides are 1
    const double s3 = std::sqrt(3.0);
    Alcove base{AffinePermutation(3),
                {Vec2{0, 0}, Vec2{0, 1}, Vec2{-s3 / 2, 0.5}}};

    std::deque<Alcove> frontier{base};
    std::map<std::vector<i64>, Alcove> seen{{base.w.window(), base}};
    while (!frontier.empty()) {
        Alcove cur = frontier.front();
        frontier.pop_front();
        if (length(cur.w) >= radius) continue;
        for (i64 t = 0; t < 3; ++t) {
            Alcove next = cur;
            next.w = cur.w.apply_right(t);
            if (seen.count(next.w.window())) continue;
            next.v[t] = reflect_across(cur.v[t], cur.v[(t + 1) % 3], cur.v[(t + 2) % 3]);
            seen.emplace(next.w.window(), next);
            frontier.push_back(next);
        }
    }

    double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
    for (const auto& [win, a] : seen)
        for (const Vec2& p : a.v) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
    const double pad = 0.25, scale = 140;
    auto px = [&](double x) { return fmt((x - lo_x + pad) * scale); };
    auto py = [&](double y) { return fmt((hi_y - y + pad) * scale); };  // flip y

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << fmt((hi_x - lo_x + 2 * pad) * scale) << "\" height=\""
        << fmt((hi_y - lo_y + 2 * pad) * scale) << "\">\n";
    for (const auto& [win, a] : seen) {
        bool marked = highlight == AlcoveHighlight::coset_set ? is_in_SnP(a.w, m)
                                                              : is_grassmannian(a.w);
        const char* fill = marked
                               ? (highlight == AlcoveHighlight::coset_set ? "#f4b6c2" : "#b8cdf5")
                               : "#ffffff";
        svg << "<polygon points=\"";
        for (int i = 0; i < 3; ++i)
            svg << (i ? " " : "") << px(a.v[i].x) << "," << py(a.v[i].y);
        svg << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    for (const auto& [win, a] : seen) {
        double cx = (a.v[0].x + a.v[1].x + a.v[2].x) / 3;
        double cy = (a.v[0].y + a.v[1].y + a.v[2].y) / 3;
        std::string label = "e";
        Word word = reduced_word(a.w);
        if (!word.letters.empty()) {
            label.clear();
            for (i64 t : word.letters) label += std::to_string(t);
        }
        svg << "<text x=\"" << px(cx) << "\" y=\"" << py(cy - 0.05)
            << "\" font-size=\"" << fmt(scale * 0.14)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace qhgr
