#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "embed_detail.hpp"
#include "simemb/decide.hpp"
#include "simemb/embed.hpp"
#include "simemb/planarity.hpp"

namespace simemb {

std::string_view to_string(EmbeddingLevel level) {
    switch (level) {
        case EmbeddingLevel::Weak: return "weak";
        case EmbeddingLevel::Strong: return "strong";
        case EmbeddingLevel::Full: return "full";
    }
    return "?";
}

bool ValidationReport::passes(EmbeddingLevel level) const {
    switch (level) {
        case EmbeddingLevel::Weak: return weak_ok();
        case EmbeddingLevel::Strong: return strong_ok();
        case EmbeddingLevel::Full: return full_ok();
    }
    return false;
}

namespace {

// A straight-line drawing: vertex positions plus segments.
struct Skeleton {
    std::vector<Point> pos;
    std::vector<Edge> edges;
};

// Smallest distance between a vertex and another vertex or a segment not
// incident to it.
double feature_separation(const Skeleton& s) {
    double best = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(s.pos.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s.pos[a].fx < s.pos[b].fx; });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Point& a = s.pos[order[i]];
            const Point& b = s.pos[order[j]];
            if (b.fx - a.fx >= best) break;
            best = std::min(best, std::hypot(a.fx - b.fx, a.fy - b.fy));
        }
    for (auto [u, v] : s.edges) {
        const Point& a = s.pos[u];
        const Point& b = s.pos[v];
        const double lo = std::min(a.fx, b.fx), hi = std::max(a.fx, b.fx);
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            const Point& p = s.pos[w];
            if (p.fx < lo - best || p.fx > hi + best) continue;
            best = std::min(best, distance_point_segment(p.fx, p.fy, a.fx, a.fy, b.fx, b.fy));
        }
    }
    return best;
}

// Largest 1/sin(theta/2) over angles theta < 180 degrees between consecutive
// edges of one tree at a common vertex.
double miter_factor(const std::vector<Point>& pos, const std::vector<Edge>& edges) {
    std::map<int, std::vector<double>> angles;
    for (auto [u, v] : edges) {
        angles[u].push_back(std::atan2(pos[v].fy - pos[u].fy, pos[v].fx - pos[u].fx));
        angles[v].push_back(std::atan2(pos[u].fy - pos[v].fy, pos[u].fx - pos[v].fx));
    }
    double factor = 1.0;
    for (auto& [w, a] : angles) {
        if (a.size() < 2) continue;
        std::sort(a.begin(), a.end());
        for (std::size_t i = 0; i < a.size(); ++i) {
            double gap = (i + 1 < a.size() ? a[i + 1] : a[0] + 2 * M_PI) - a[i];
            if (gap < M_PI) factor = std::max(factor, 1.0 / std::max(std::sin(gap / 2), 1e-12));
        }
    }
    return factor;
}

// Largest power of two not exceeding x (x > 0).
Rational power_of_two_below(double x) {
    int e = 0;
    std::frexp(x, &e);  // x = m * 2^e with m in [0.5, 1)
    Rational r = 1;
    const int k = e - 1;
    if (k >= 0) {
        mpz_class p = 1;
        p <<= static_cast<unsigned long>(k);
        r = Rational(p);
    } else {
        mpz_class p = 1;
        p <<= static_cast<unsigned long>(-k);
        r = Rational(1, 1) / Rational(p);
    }
    r.canonicalize();
    return r;
}

// Radius with r * (13/12) * miter <= delta / 4.
Rational base_radius(double delta, double miter) {
    if (!std::isfinite(delta)) delta = 1.0;
    return power_of_two_below(delta / (4.0 * miter * 13.0 / 12.0));
}

// Scale factors tried in order: 1, 3/4, 1/2, 3/8, 1/4, ...
Rational attempt_factor(int attempt) {
    Rational f = (attempt % 2 == 0) ? Rational(1) : Rational(3, 4);
    for (int i = 0; i < attempt / 2; ++i) f /= 2;
    return f;
}

// Radius of partition 1 regions relative to partition 0, cycling with the
// attempt number.
Rational thin_ratio(int attempt) {
    static const Rational ratios[] = {Rational(1, 2), Rational(5, 11), Rational(6, 13), Rational(7, 16)};
    return ratios[attempt % 4];
}

constexpr int kAttempts = 12;

using Builder = std::function<EmbeddingArtifact(const Rational& thick, const Rational& thin)>;

EmbeddingArtifact with_retries(const Builder& build, EmbeddingLevel level, const char* what) {
    std::string last;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        try {
            const Rational f = attempt_factor(attempt);
            EmbeddingArtifact art = build(f, f * thin_ratio(attempt));
            const auto report = validate_embedding(art, level);
            if (report.passes(level)) return art;
            last = report.problems.empty() ? "validation failed" : report.problems.front();
        } catch (const TangentBoundaries& e) {
            last = e.what();
        } catch (const SelfIntersectingPolygon& e) {
            last = e.what();
        }
    }
    throw Error(std::string("could not construct a valid ") + what + " embedding: " + last);
}

std::vector<Edge> induced_edges(const SimpleGraph& g, const std::vector<int>& members) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.has_edge(members[i], members[j])) out.push_back(make_edge(members[i], members[j]));
    return out;
}

}  // namespace

EmbeddingArtifact weak_embedding(const PartitionPair& pair, const std::optional<std::vector<Point>>& user_points) {
    const int n = pair.element_count();
    std::vector<Point> pts;
    if (user_points) {
        if (static_cast<int>(user_points->size()) != n)
            throw SizeMismatch("expected " + std::to_string(n) + " points, got " + std::to_string(user_points->size()));
        require_general_position(*user_points);
        pts = *user_points;
    } else {
        pts = default_points(n);
    }

    // Lexicographic order of the point set; consecutive runs are separated by
    // lines, so trees placed on different runs cannot interact.
    std::vector<int> lex(n);
    for (int i = 0; i < n; ++i) lex[i] = i;
    std::sort(lex.begin(), lex.end(), [&](int a, int b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });

    // Partition 0: one path per block, placed on its own run of points.
    std::vector<int> blocks0(pair.block_count(0));
    for (int i = 0; i < pair.block_count(0); ++i) blocks0[i] = i;
    std::stable_sort(blocks0.begin(), blocks0.end(), [&](int a, int b) {
        return pair.blocks(0)[a].members.size() > pair.blocks(0)[b].members.size();
    });
    std::vector<int> point_of(n, -1);
    std::vector<std::vector<Edge>> tree0(pair.block_count(0));
    std::size_t cursor = 0;
    for (int bi : blocks0) {
        const auto& members = pair.blocks(0)[bi].members;
        const int k = static_cast<int>(members.size());
        std::vector<Point> chunk;
        std::vector<int> chunk_ids;
        for (int i = 0; i < k; ++i) {
            chunk_ids.push_back(lex[cursor + i]);
            chunk.push_back(pts[lex[cursor + i]]);
        }
        cursor += k;
        const auto place = detail::place_tree_on_points(path_graph(k), chunk);
        for (int i = 0; i < k; ++i) point_of[members[i]] = chunk_ids[place[i]];
        for (int i = 0; i + 1 < k; ++i) tree0[bi].push_back(make_edge(members[i], members[i + 1]));
    }
    std::vector<Point> element_pos(n);
    for (int e = 0; e < n; ++e) element_pos[e] = pts[point_of[e]];

    // Partition 1: x-monotone tracks in a sheared frame where all points have
    // distinct abscissae. At each point the tracks that span it are stacked
    // in a fixed global order, so no two tracks ever cross.
    Rational eps = 0;
    {
        Rational min_dx = -1, y_lo = pts.empty() ? 0 : pts[0].y, y_hi = y_lo;
        bool dup = false;
        for (int i = 0; i + 1 < n; ++i) {
            const Rational dx = pts[lex[i + 1]].x - pts[lex[i]].x;
            if (dx == 0) dup = true;
            else if (min_dx < 0 || dx < min_dx) min_dx = dx;
        }
        for (const auto& p : pts) {
            y_lo = std::min(y_lo, p.y);
            y_hi = std::max(y_hi, p.y);
        }
        if (dup) eps = (min_dx < 0 ? Rational(1) : min_dx) / (2 * (y_hi - y_lo + 1));
    }
    std::vector<int> rank_of_point(n);  // element -> position in sweep order
    std::vector<int> sweep;             // elements in sweep order
    {
        std::vector<int> elem_of_point(n);
        for (int e = 0; e < n; ++e) elem_of_point[point_of[e]] = e;
        for (int i = 0; i < n; ++i) {
            sweep.push_back(elem_of_point[lex[i]]);
            rank_of_point[sweep.back()] = i;
        }
    }
    const int nb1 = pair.block_count(1);
    std::vector<int> first(nb1, n), last(nb1, -1);
    for (int e = 0; e < n; ++e) {
        const int b = pair.block_of(1, e);
        first[b] = std::min(first[b], rank_of_point[e]);
        last[b] = std::max(last[b], rank_of_point[e]);
    }
    Skeleton sk1{element_pos, {}};
    std::vector<std::vector<int>> track_vertices(nb1);
    std::vector<std::vector<Edge>> track_edges(nb1);
    const Rational spacing = 1;
    for (int j = 0; j < n; ++j) {
        const int e = sweep[j];
        const Point& p = element_pos[e];
        const Rational xs = p.x + eps * p.y;
        const int own = pair.block_of(1, e);
        int own_rank = 0;
        std::vector<int> active;
        for (int b = 0; b < nb1; ++b)
            if (first[b] <= j && j <= last[b]) {
                if (b == own) own_rank = static_cast<int>(active.size());
                active.push_back(b);
            }
        for (int k = 0; k < static_cast<int>(active.size()); ++k) {
            const int b = active[k];
            int vid;
            if (b == own) {
                vid = e;
            } else {
                const Rational y = p.y + spacing * (k - own_rank);
                vid = static_cast<int>(sk1.pos.size());
                sk1.pos.emplace_back(xs - eps * y, y);
            }
            if (!track_vertices[b].empty()) track_edges[b].push_back(make_edge(track_vertices[b].back(), vid));
            track_vertices[b].push_back(vid);
        }
    }
    for (const auto& te : track_edges) sk1.edges.insert(sk1.edges.end(), te.begin(), te.end());

    Skeleton sk0{element_pos, {}};
    for (const auto& t : tree0) sk0.edges.insert(sk0.edges.end(), t.begin(), t.end());
    const Rational r0 = base_radius(feature_separation(sk0), miter_factor(sk0.pos, sk0.edges));
    const Rational r1 = base_radius(feature_separation(sk1), miter_factor(sk1.pos, sk1.edges));

    auto build = [&](const Rational& f, const Rational&) {
        EmbeddingArtifact art{pair, element_pos, std::vector<Polygon>(pair.block_count()), EmbeddingLevel::Weak, true};
        for (int b = 0; b < pair.block_count(0); ++b)
            art.regions[pair.flat_index({0, b})] = inflate_tree(sk0.pos, pair.blocks(0)[b].members, tree0[b], r0 * f);
        for (int b = 0; b < nb1; ++b)
            art.regions[pair.flat_index({1, b})] = inflate_tree(sk1.pos, track_vertices[b], track_edges[b], r1 * f);
        return art;
    };
    return with_retries(build, EmbeddingLevel::Weak, "weak");
}

EmbeddingArtifact strong_embedding(const PartitionPair& pair, const SupportGraph& support) {
    const auto check = is_support(support.graph, pair);
    if (!check) throw NotASupport("block " + pair.block_label(*check.violating_block) + " is disconnected in the support");
    if (!is_planar(support.graph)) throw NotPlanar("support graph is not planar");

    const SupportGraph tree_based = reduce_to_tree_based(support, pair);
    const auto drawing = straight_line_drawing(planar_embedding(tree_based.graph));
    Skeleton sk;
    for (const auto& p : drawing.positions) sk.pos.emplace_back(p.x, p.y);
    sk.edges.assign(tree_based.graph.edges().begin(), tree_based.graph.edges().end());

    std::vector<std::vector<Edge>> trees(pair.block_count());
    std::vector<Edge> all_tree_edges;
    for (BlockRef b : pair.all_blocks()) {
        trees[pair.flat_index(b)] = induced_edges(tree_based.graph, pair.block(b).members);
    }
    double miter = 1.0;
    for (const auto& t : trees) miter = std::max(miter, miter_factor(sk.pos, t));
    const Rational r = base_radius(feature_separation(sk), miter);

    auto build = [&](const Rational& f, const Rational& g) {
        EmbeddingArtifact art{pair, sk.pos, std::vector<Polygon>(pair.block_count()), EmbeddingLevel::Strong, true};
        for (BlockRef b : pair.all_blocks()) {
            const Rational radius = b.partition == 0 ? Rational(r * f) : Rational(r * g);
            art.regions[pair.flat_index(b)] = inflate_tree(sk.pos, pair.block(b).members, trees[pair.flat_index(b)], radius);
        }
        return art;
    };
    return with_retries(build, EmbeddingLevel::Strong, "strong");
}

EmbeddingArtifact full_embedding(const PartitionPair& pair) {
    if (!decide_full(pair)) throw NotFullyEmbeddable("bipartite map non-planar");

    const int n = pair.element_count();
    const auto big = block_intersection_graph(pair).graph;

    // One representative element per intersecting block pair.
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (int e = 0; e < n; ++e) shared[{pair.block_of(0, e), pair.block_of(1, e)}].push_back(e);

    // A block meeting a single other block is contained in it and is drawn
    // as a small octagon around the representative.
    std::vector<bool> inner(pair.block_count(), false);
    for (BlockRef b : pair.all_blocks()) {
        const int f = pair.flat_index(b);
        if (big.degree(f) != 1) continue;
        const int partner = big.neighbors(f)[0];
        if (big.degree(partner) == 1 && b.partition == 0) continue;
        inner[f] = true;
    }

    // Star graph: representatives and the centres of non-inner blocks.
    SimpleGraph star;
    std::vector<int> vertex_of_rep(n, -1);
    for (const auto& [key, elems] : shared) vertex_of_rep[elems.front()] = star.add_vertex(pair.element(elems.front()));
    std::vector<int> centre(pair.block_count(), -1);
    for (BlockRef b : pair.all_blocks()) {
        const int f = pair.flat_index(b);
        if (inner[f]) continue;
        centre[f] = star.add_vertex(pair.block_label(b));
    }
    std::vector<std::vector<Edge>> star_edges(pair.block_count());
    for (const auto& [key, elems] : shared) {
        const int rep = vertex_of_rep[elems.front()];
        for (int p = 0; p < 2; ++p) {
            const int f = pair.flat_index({p, p == 0 ? key.first : key.second});
            if (inner[f]) continue;
            star.add_edge(centre[f], rep);
            star_edges[f].push_back(make_edge(centre[f], rep));
        }
    }

    const auto drawing = straight_line_drawing(planar_embedding(star));
    Skeleton sk;
    for (const auto& p : drawing.positions) sk.pos.emplace_back(p.x, p.y);
    sk.edges.assign(star.edges().begin(), star.edges().end());
    double miter = 1.0;
    for (const auto& t : star_edges) miter = std::max(miter, miter_factor(sk.pos, t));
    const Rational r = base_radius(feature_separation(sk), miter);

    auto build = [&](const Rational& f, const Rational& g) {
        const Rational radius = r * f;
        std::vector<Point> points(n);
        for (const auto& [key, elems] : shared) {
            const Point& c = sk.pos[vertex_of_rep[elems.front()]];
            points[elems.front()] = c;
            // Remaining shared elements on a short ray inside the overlap.
            const int extra = static_cast<int>(elems.size()) - 1;
            for (int k = 1; k <= extra; ++k) {
                const Rational t = radius / 8 * k / (extra + 1);
                points[elems[k]] = Point(c.x + t * 12 / 13, c.y + t * 5 / 13);
            }
        }
        EmbeddingArtifact art{pair, points, std::vector<Polygon>(pair.block_count()), EmbeddingLevel::Full, true};
        for (BlockRef b : pair.all_blocks()) {
            const int fl = pair.flat_index(b);
            if (inner[fl]) {
                const int rep = shared.at({pair.block_of(0, pair.block(b).members[0]),
                                           pair.block_of(1, pair.block(b).members[0])}).front();
                art.regions[fl] = octagon(points[rep], radius / 4);
                continue;
            }
            std::vector<int> verts{centre[fl]};
            for (auto [u, v] : star_edges[fl]) verts.push_back(u == centre[fl] ? v : u);
            art.regions[fl] = inflate_tree(sk.pos, verts, star_edges[fl], b.partition == 0 ? radius : Rational(r * g));
        }
        return art;
    };
    return with_retries(build, EmbeddingLevel::Full, "full");
}

}  // namespace simemb
