#include <algorithm>
#include <functional>

#include "embed_detail.hpp"
#include "simemb/embed.hpp"

namespace simemb {

namespace {

// Octagon template at radius 12; vertex k of the radius-r octagon is
// kOctagon[k] * r / 12. Counter-clockwise, starting just above the +x axis.
constexpr int kOctagon[8][2] = {{12, 5}, {5, 12}, {-5, 12}, {-12, 5}, {-12, -5}, {-5, -12}, {5, -12}, {12, -5}};

Point octagon_vertex(const Point& c, const Rational& r, int k) {
    const Rational s = r / 12;
    return {c.x + s * kOctagon[k][0], c.y + s * kOctagon[k][1]};
}

// Octagon vertices maximising the dot product with n: {first, last} in
// counter-clockwise order (equal unless n is normal to an octagon edge).
std::pair<int, int> support(const Rational& nx, const Rational& ny) {
    Rational best;
    int count = 0;
    bool is_max[8] = {};
    Rational dots[8];
    for (int k = 0; k < 8; ++k) {
        dots[k] = nx * kOctagon[k][0] + ny * kOctagon[k][1];
        if (k == 0 || dots[k] > best) best = dots[k];
    }
    for (int k = 0; k < 8; ++k)
        if (dots[k] == best) {
            is_max[k] = true;
            ++count;
        }
    for (int k = 0; k < 8; ++k) {
        if (!is_max[k]) continue;
        if (count == 1) return {k, k};
        if (is_max[(k + 1) % 8]) return {k, (k + 1) % 8};
    }
    throw Error("octagon support lookup failed");
}

bool upper_half(const Rational& dx, const Rational& dy) { return dy > 0 || (dy == 0 && dx > 0); }

// Counter-clockwise angular comparison of direction vectors.
bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    const bool ua = upper_half(ax, ay), ub = upper_half(bx, by);
    if (ua != ub) return ua;
    return ax * by - ay * bx > 0;
}

}  // namespace

Polygon octagon(const Point& c, const Rational& r) {
    Polygon poly;
    for (int k = 0; k < 8; ++k) poly.push_back(octagon_vertex(c, r, k));
    return poly;
}

Polygon inflate_tree(const std::vector<Point>& pos, const std::vector<int>& vertices, const std::vector<Edge>& edges,
                     const Rational& r) {
    if (edges.empty()) {
        if (vertices.size() != 1) throw Error("inflate_tree: edgeless skeleton must have one vertex");
        return octagon(pos[vertices[0]], r);
    }

    std::map<int, std::vector<int>> around;
    for (auto [u, v] : edges) {
        around[u].push_back(v);
        around[v].push_back(u);
    }
    for (auto& [w, nb] : around) {
        const Point& c = pos[w];
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            return angle_less(pos[a].x - c.x, pos[a].y - c.y, pos[b].x - c.x, pos[b].y - c.y);
        });
    }
    auto ccw_next = [&](int w, int v) {
        const auto& nb = around.at(w);
        const auto it = std::find(nb.begin(), nb.end(), v);
        return (it + 1 == nb.end()) ? nb.front() : *(it + 1);
    };

    Polygon poly;
    auto emit_corner = [&](int v, int w, int x) {
        const Point& pw = pos[w];
        const Rational ax = pos[v].x - pw.x, ay = pos[v].y - pw.y;
        const Rational bx = pos[x].x - pw.x, by = pos[x].y - pw.y;
        // Right-hand normals of the incoming (v->w) and outgoing (w->x) edges.
        const auto in = support(-ay, ax);
        const auto out = support(by, -bx);
        const Rational cross = ax * by - ay * bx;
        if (v != x && cross > 0) {
            const Point p1 = octagon_vertex(pw, r, in.second);
            const Point p2 = octagon_vertex(pw, r, out.first);
            poly.push_back(line_intersection(p1, Point(-ax, -ay), p2, Point(bx, by)));
            return;
        }
        if (v != x && cross == 0) return;  // straight continuation
        const int steps = (out.first - in.second + 8) % 8;
        for (int k = 0; k <= steps; ++k) poly.push_back(octagon_vertex(pw, r, (in.second + k) % 8));
    };

    const int start = around.begin()->first;
    const int first = around.begin()->second.front();
    int v = start, w = first;
    do {
        const int x = ccw_next(w, v);
        emit_corner(v, w, x);
        v = w;
        w = x;
    } while (!(v == start && w == first));
    return poly;
}

std::vector<int> tree_on_points(const SimpleGraph& tree, const std::vector<Point>& points) {
    const int n = tree.vertex_count();
    if (static_cast<int>(points.size()) != n)
        throw SizeMismatch("tree has " + std::to_string(n) + " vertices but " + std::to_string(points.size()) +
                           " points were given");
    if (n == 0) return {};
    if (!is_connected(tree) || !is_forest(tree)) throw Error("tree_on_points: graph is not a tree");
    require_general_position(points);
    return detail::place_tree_on_points(tree, points);
}

namespace detail {

std::vector<int> place_tree_on_points(const SimpleGraph& tree, const std::vector<Point>& points) {
    const int n = tree.vertex_count();
    if (n == 0) return {};

    std::vector<int> size(n, 1), parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : tree.neighbors(v))
            if (parent[w] == -1) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != 0) size[parent[*it]] += size[*it];

    std::vector<int> result(n, -1);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    const int root_point = *std::min_element(all.begin(), all.end(), [&](int a, int b) {
        return points[a].y != points[b].y ? points[a].y < points[b].y : points[a].x < points[b].x;
    });

    std::function<void(int, int, std::vector<int>)> place = [&](int v, int q, std::vector<int> rest) {
        result[v] = q;
        const Point& c = points[q];
        std::sort(rest.begin(), rest.end(), [&](int a, int b) { return orientation(c, points[a], points[b]) > 0; });
        std::size_t next = 0;
        for (int w : tree.neighbors(v)) {
            if (parent[w] != v || w == 0) continue;
            std::vector<int> chunk(rest.begin() + static_cast<long>(next) + 1,
                                   rest.begin() + static_cast<long>(next) + size[w]);
            const int head = rest[next];
            next += size[w];
            place(w, head, std::move(chunk));
        }
    };
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != root_point) rest.push_back(i);
    place(0, root_point, rest);
    return result;
}

}  // namespace detail

std::vector<Point> default_points(int n) {
    auto is_prime = [](int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    int p = std::max(n, 2);
    while (!is_prime(p)) ++p;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(static_cast<long long>(i), static_cast<long long>((static_cast<long long>(i) * i) % p));
    return pts;
}

}  // namespace simemb
