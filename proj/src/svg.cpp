#include "simemb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace simemb {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const EmbeddingArtifact& art, const RenderStyle& style) {
    const PartitionPair& pair = art.pair;
    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x;
    auto grow = [&](const Point& p) {
        min_x = std::min(min_x, p.fx);
        max_x = std::max(max_x, p.fx);
        min_y = std::min(min_y, p.fy);
        max_y = std::max(max_y, p.fy);
    };
    for (const auto& p : art.points) grow(p);
    for (const auto& poly : art.regions)
        for (const auto& p : poly) grow(p);
    if (!(min_x <= max_x)) min_x = max_x = min_y = max_y = 0.0;

    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double scale = style.canvas / extent;
    const double width = (max_x - min_x) * scale + 2 * style.padding;
    const double height = (max_y - min_y) * scale + 2 * style.padding;
    // Geometry is y-up, SVG is y-down.
    auto sx = [&](double x) { return num((x - min_x) * scale + style.padding); };
    auto sy = [&](double y) { return num((max_y - y) * scale + style.padding); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out += "<g id=\"regions\" stroke-width=\"" + num(style.stroke_width) + "\" fill-opacity=\"" +
           num(style.fill_opacity) + "\">\n";
    const auto blocks = pair.all_blocks();
    for (std::size_t f = 0; f < blocks.size(); ++f) {
        const BlockRef b = blocks[f];
        const auto& palette = b.partition == 0 ? style.warm : style.cool;
        const std::string& color = palette[static_cast<std::size_t>(b.index) % palette.size()];
        const Polygon& poly = art.regions[f];
        std::string d;
        for (std::size_t i = 0; i < poly.size(); ++i)
            d += (i == 0 ? "M" : " L") + sx(poly[i].fx) + " " + sy(poly[i].fy);
        d += " Z";
        out += "<path class=\"p" + std::to_string(b.partition) + "\" data-block=\"" + escape(pair.block_label(b)) +
               "\" fill=\"" + color + "\" stroke=\"" + color + "\" d=\"" + d + "\"/>\n";
    }
    out += "</g>\n<g id=\"elements\" fill=\"#000000\">\n";
    for (int e = 0; e < pair.element_count(); ++e) {
        const Point& p = art.points[e];
        out += "<circle cx=\"" + sx(p.fx) + "\" cy=\"" + sy(p.fy) + "\" r=\"" + num(style.element_radius) + "\"/>\n";
    }
    out += "</g>\n<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" + num(style.font_size) + "\">\n";
    for (int e = 0; e < pair.element_count(); ++e) {
        const Point& p = art.points[e];
        out += "<text x=\"" + num((p.fx - min_x) * scale + style.padding + style.element_radius + 1) + "\" y=\"" +
               sy(p.fy) + "\">" + escape(pair.element(e)) + "</text>\n";
    }
    for (std::size_t f = 0; f < blocks.size(); ++f) {
        const Polygon& poly = art.regions[f];
        if (poly.empty()) continue;
        // Block name next to the region's topmost vertex.
        const auto top = std::max_element(poly.begin(), poly.end(), [](const Point& a, const Point& b) {
            return a.fy != b.fy ? a.fy < b.fy : a.fx > b.fx;
        });
        out += "<text class=\"block\" font-weight=\"bold\" x=\"" + sx(top->fx) + "\" y=\"" +
               num((max_y - top->fy) * scale + style.padding - 2) + "\">" + escape(pair.block(blocks[f]).name) +
               "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace simemb
