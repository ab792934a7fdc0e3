#pragma once

#include <array>
#include <string>

#include "simemb/embed.hpp"

namespace simemb {

struct RenderStyle {
    double canvas = 800.0;  // length of the longer side of the drawing area
    double padding = 40.0;
    double stroke_width = 1.5;
    double element_radius = 3.0;
    double font_size = 11.0;
    double fill_opacity = 0.4;
    std::array<std::string, 8> warm{"#d73027", "#f46d43", "#fdae61", "#e6550d",
                                    "#fd8d3c", "#a63603", "#cb181d", "#fec44f"};
    std::array<std::string, 8> cool{"#4575b4", "#74add1", "#1a9850", "#313695",
                                    "#66c2a5", "#3288bd", "#5e4fa2", "#41b6c4"};
};

/// SVG 1.1 document: one closed path per block region, one circle and one
/// label per element, one label per block. Same input, same bytes.
std::string render_svg(const EmbeddingArtifact& artifact, const RenderStyle& style = {});

}  // namespace simemb
