#include "simemb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace simemb {

BBox bbox_of(const Polygon& poly) {
    BBox b{poly[0].fx, poly[0].fy, poly[0].fx, poly[0].fy};
    for (const auto& p : poly) {
        b.min_x = std::min(b.min_x, p.fx);
        b.max_x = std::max(b.max_x, p.fx);
        b.min_y = std::min(b.min_y, p.fy);
        b.max_y = std::max(b.max_y, p.fy);
    }
    return b;
}

BBox bbox_of(const Point& a, const Point& b) {
    return {std::min(a.fx, b.fx), std::min(a.fy, b.fy), std::max(a.fx, b.fx), std::max(a.fy, b.fy)};
}

int orientation(const Point& a, const Point& b, const Point& c) {
    const double l = (b.fx - a.fx) * (c.fy - a.fy);
    const double r = (b.fy - a.fy) * (c.fx - a.fx);
    const double det = l - r;
    const double scale = std::max({std::abs(a.fx), std::abs(a.fy), std::abs(b.fx), std::abs(b.fy), std::abs(c.fx),
                                   std::abs(c.fy), 1.0});
    if (std::abs(det) > 1e-12 * scale * scale) return det > 0 ? 1 : -1;
    const Rational e = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(e);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

SegmentContact segment_contact(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (!bbox_of(a, b).overlaps(bbox_of(c, d), 1e-9)) return SegmentContact::None;
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        return (o1 != o2 && o3 != o4) ? SegmentContact::Proper : SegmentContact::None;
    }
    if (on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d))
        return SegmentContact::Degenerate;
    return SegmentContact::None;
}

int point_in_polygon(const Point& p, const Polygon& poly) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = poly[j];
        const Point& b = poly[i];
        if (std::min(a.fy, b.fy) > p.fy + 1e-9 * (1 + std::abs(p.fy))) continue;
        if (std::max(a.fy, b.fy) < p.fy - 1e-9 * (1 + std::abs(p.fy))) continue;
        if (on_segment(p, a, b)) return 0;
        if ((a.y > p.y) != (b.y > p.y)) {
            // Edge straddles the horizontal line through p; count it if the
            // crossing lies to the right of p.
            const int o = orientation(a, b, p);
            if ((b.y > a.y) ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside ? 1 : -1;
}

bool is_simple_polygon(const Polygon& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    std::vector<BBox> boxes(n);
    for (std::size_t i = 0; i < n; ++i) boxes[i] = bbox_of(poly[i], poly[(i + 1) % n]);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].min_x < boxes[b].min_x; });

    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < n; ++oj) {
            const std::size_t j = order[oj];
            if (boxes[j].min_x > boxes[i].max_x + 1e-9) break;
            if (!boxes[i].overlaps(boxes[j], 1e-9)) continue;
            const Point& a = poly[i];
            const Point& b = poly[(i + 1) % n];
            const Point& c = poly[j];
            const Point& d = poly[(j + 1) % n];
            const bool adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if (!adjacent) {
                if (segment_contact(a, b, c, d) != SegmentContact::None) return false;
                continue;
            }
            // Consecutive edges share exactly one vertex; they must not overlap.
            const Point& shared = (i + 1) % n == j ? b : a;
            const Point& p = (i + 1) % n == j ? a : b;
            const Point& q = (i + 1) % n == j ? d : c;
            if (orientation(shared, p, q) == 0 &&
                ((p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y)) > 0)
                return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (poly[i] == poly[(i + 1) % n]) return false;
    return true;
}

Rational signed_area2(const Polygon& poly) {
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

double distance_point_segment(double px, double py, double ax, double ay, double bx, double by) {
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

double distance_segment_segment(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segment_contact(a, b, c, d) != SegmentContact::None) return 0.0;
    return std::min({distance_point_segment(a.fx, a.fy, c.fx, c.fy, d.fx, d.fy),
                     distance_point_segment(b.fx, b.fy, c.fx, c.fy, d.fx, d.fy),
                     distance_point_segment(c.fx, c.fy, a.fx, a.fy, b.fx, b.fy),
                     distance_point_segment(d.fx, d.fy, a.fx, a.fy, b.fx, b.fy)});
}

Point line_intersection(const Point& p, const Point& u, const Point& q, const Point& v) {
    const Rational den = u.x * v.y - u.y * v.x;
    if (den == 0) throw Error("line_intersection: parallel lines");
    const Rational t = ((q.x - p.x) * v.y - (q.y - p.y) * v.x) / den;
    return {p.x + t * u.x, p.y + t * u.y};
}

void require_general_position(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) throw CollinearPoints("two points coincide");
            for (std::size_t k = j + 1; k < n; ++k)
                if (orientation(points[i], points[j], points[k]) == 0)
                    throw CollinearPoints("three points are collinear");
        }
}

}  // namespace simemb
