#include <algorithm>
#include <cmath>
#include <limits>

#include "simemb/embed.hpp"

namespace simemb {

namespace {

struct Boundary {
    const Polygon* poly;
    std::vector<BBox> edge_boxes;
    BBox box;
};

Boundary make_boundary(const Polygon& poly) {
    Boundary b{&poly, {}, bbox_of(poly)};
    for (std::size_t i = 0; i < poly.size(); ++i) b.edge_boxes.push_back(bbox_of(poly[i], poly[(i + 1) % poly.size()]));
    return b;
}

// Number of proper crossings between the two boundaries; throws on any
// touching contact.
int count_crossings(const Boundary& a, const Boundary& b, const std::string& what) {
    int crossings = 0;
    const Polygon& pa = *a.poly;
    const Polygon& pb = *b.poly;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (!a.edge_boxes[i].overlaps(b.box, 1e-9)) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) {
            if (!a.edge_boxes[i].overlaps(b.edge_boxes[j], 1e-9)) continue;
            switch (segment_contact(pa[i], pa[(i + 1) % pa.size()], pb[j], pb[(j + 1) % pb.size()])) {
                case SegmentContact::Proper: ++crossings; break;
                case SegmentContact::Degenerate: throw TangentBoundaries("boundaries of " + what + " touch");
                case SegmentContact::None: break;
            }
        }
    }
    return crossings;
}

double boundary_distance(const Boundary& a, const Boundary& b, double limit) {
    double best = std::numeric_limits<double>::infinity();
    const Polygon& pa = *a.poly;
    const Polygon& pb = *b.poly;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (!a.edge_boxes[i].overlaps(b.box, limit)) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) {
            if (!a.edge_boxes[i].overlaps(b.edge_boxes[j], limit)) continue;
            best = std::min(best, distance_segment_segment(pa[i], pa[(i + 1) % pa.size()], pb[j], pb[(j + 1) % pb.size()]));
        }
    }
    return best;
}

double min_point_distance(const std::vector<Point>& pts) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<const Point*> order;
    for (const auto& p : pts) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) { return a->fx < b->fx; });
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (order[j]->fx - order[i]->fx >= best) break;
            best = std::min(best, std::hypot(order[j]->fx - order[i]->fx, order[j]->fy - order[i]->fy));
        }
    return std::isfinite(best) ? best : 1.0;
}

}  // namespace

ValidationReport validate_embedding(const EmbeddingArtifact& art, EmbeddingLevel level) {
    const PartitionPair& pair = art.pair;
    const int n = pair.element_count();
    const int nb = pair.block_count();
    if (static_cast<int>(art.points.size()) != n)
        throw SizeMismatch("artifact has " + std::to_string(art.points.size()) + " points for " + std::to_string(n) +
                           " elements");
    if (static_cast<int>(art.regions.size()) != nb)
        throw SizeMismatch("artifact has " + std::to_string(art.regions.size()) + " regions for " + std::to_string(nb) +
                           " blocks");

    ValidationReport report;
    std::vector<BlockRef> refs = pair.all_blocks();
    for (int f = 0; f < nb; ++f)
        if (!is_simple_polygon(art.regions[f]))
            throw SelfIntersectingPolygon("region of " + pair.block_label(refs[f]) + " is not a simple polygon");

    // inside[f][e]: element e lies strictly inside region f.
    std::vector<std::vector<bool>> inside(nb, std::vector<bool>(n, false));
    for (int f = 0; f < nb; ++f) {
        const BBox box = bbox_of(art.regions[f]);
        const BlockRef b = refs[f];
        for (int e = 0; e < n; ++e) {
            const Point& p = art.points[e];
            const bool in_box = p.fx >= box.min_x - 1e-9 && p.fx <= box.max_x + 1e-9 && p.fy >= box.min_y - 1e-9 &&
                                p.fy <= box.max_y + 1e-9;
            const int where = in_box ? point_in_polygon(p, art.regions[f]) : -1;
            inside[f][e] = where > 0;
            const bool member = pair.block_of(b.partition, e) == b.index;
            if (where == 0) {
                report.membership_ok = false;
                report.problems.push_back("element " + pair.element(e) + " lies on the boundary of " +
                                          pair.block_label(b));
            } else if (member && where < 0) {
                report.membership_ok = false;
                report.problems.push_back("element " + pair.element(e) + " is outside its block " +
                                          pair.block_label(b));
            } else if (!member && where > 0) {
                report.membership_ok = false;
                report.problems.push_back("element " + pair.element(e) + " is inside foreign block " +
                                          pair.block_label(b));
            }
        }
    }

    std::vector<Boundary> bounds;
    for (int f = 0; f < nb; ++f) bounds.push_back(make_boundary(art.regions[f]));
    const double near_miss = min_point_distance(art.points) * 1e-6;

    for (int fa = 0; fa < nb; ++fa)
        for (int fb = fa + 1; fb < nb; ++fb) {
            const BlockRef a = refs[fa], b = refs[fb];
            const bool same = a.partition == b.partition;
            if (!same && level == EmbeddingLevel::Weak) continue;
            const std::string what = pair.block_label(a) + " and " + pair.block_label(b);
            int crossings = 0;
            bool overlap = false;
            if (bounds[fa].box.overlaps(bounds[fb].box, near_miss)) {
                crossings = count_crossings(bounds[fa], bounds[fb], what);
                if (crossings > 0) {
                    overlap = true;
                } else {
                    overlap = point_in_polygon(art.regions[fa][0], art.regions[fb]) > 0 ||
                              point_in_polygon(art.regions[fb][0], art.regions[fa]) > 0;
                    if (!overlap && boundary_distance(bounds[fa], bounds[fb], near_miss) < near_miss)
                        throw TangentBoundaries("boundaries of " + what + " nearly touch");
                }
            }
            report.crossing_counts[{fa, fb}] = crossings;
            if (!overlap) continue;
            if (same) {
                report.same_partition_disjoint = false;
                report.problems.push_back("regions of " + what + " overlap");
                continue;
            }
            bool share_block = false, share_point = false;
            for (int e = 0; e < n; ++e) {
                if (pair.block_of(a.partition, e) == a.index && pair.block_of(b.partition, e) == b.index)
                    share_block = true;
                if (inside[fa][e] && inside[fb][e]) share_point = true;
            }
            if (!share_block) {
                report.disjoint_blocks_disjoint = false;
                report.problems.push_back("regions of element-disjoint blocks " + what + " overlap");
            }
            if (!share_point) {
                report.intersecting_pairs_share_element = false;
                report.problems.push_back("overlap of " + what + " contains no element");
            }
            if (crossings > 2) {
                report.pseudo_disk_ok = false;
                if (level == EmbeddingLevel::Full)
                    report.problems.push_back("boundaries of " + what + " cross " + std::to_string(crossings) +
                                              " times");
            }
        }

    if (level != EmbeddingLevel::Weak && !art.self_produced)
        report.note = "region checks are necessary but not sufficient for externally supplied geometry";
    return report;
}

}  // namespace simemb
