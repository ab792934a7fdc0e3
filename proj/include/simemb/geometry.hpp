#pragma once

#include <gmpxx.h>

#include <vector>

#include "simemb/core.hpp"

namespace simemb {

using Rational = mpq_class;

/// Exact point with cached floating-point shadows used by filtered predicates.
struct Point {
    Rational x;
    Rational y;
    double fx = 0.0;
    double fy = 0.0;

    Point() = default;
    Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
        x.canonicalize();
        y.canonicalize();
        fx = x.get_d();
        fy = y.get_d();
    }
    Point(long long x_, long long y_) : Point(Rational(static_cast<long>(x_)), Rational(static_cast<long>(y_))) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Closed polygon given by its vertex cycle (last vertex joins the first).
using Polygon = std::vector<Point>;

struct BBox {
    double min_x, min_y, max_x, max_y;
    bool overlaps(const BBox& o, double slack = 0.0) const {
        return min_x <= o.max_x + slack && o.min_x <= max_x + slack && min_y <= o.max_y + slack &&
               o.min_y <= max_y + slack;
    }
};

BBox bbox_of(const Polygon& poly);
BBox bbox_of(const Point& a, const Point& b);

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// p lies on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);

enum class SegmentContact { None, Proper, Degenerate };

/// Proper: the open segments cross at a single interior point. Degenerate:
/// they touch in any other way (endpoint contact, collinear overlap).
SegmentContact segment_contact(const Point& a, const Point& b, const Point& c, const Point& d);

/// +1 strictly inside, 0 on the boundary, -1 strictly outside.
int point_in_polygon(const Point& p, const Polygon& poly);

/// No two edges touch except consecutive edges at their shared vertex, and
/// consecutive edges do not fold back onto each other.
bool is_simple_polygon(const Polygon& poly);

/// Twice the signed area (positive for counter-clockwise polygons).
Rational signed_area2(const Polygon& poly);

double distance_point_segment(double px, double py, double ax, double ay, double bx, double by);
double distance_segment_segment(const Point& a, const Point& b, const Point& c, const Point& d);

/// Intersection of the lines p + t*u and q + s*v (must not be parallel).
Point line_intersection(const Point& p, const Point& u, const Point& q, const Point& v);

class CollinearPoints : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// Throws CollinearPoints when two points coincide or three are collinear.
void require_general_position(const std::vector<Point>& points);

}  // namespace simemb
