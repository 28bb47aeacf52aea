#pragma once

#include <string>
#include <variant>
#include <vector>

#include "arbelos/chain.hpp"

namespace arbelos {

/// Draws the line from the anchor through center D_i, the vertical through
/// center D_n, and cross marks at D_n and at their intersection.
struct AnchorGapOverlay {
    int i;
    int n;
};

/// Draws the line through centers D_i and D_j, the vertical through center
/// D_n, and cross marks at D_n and at their intersection.
struct CenterLineOverlay {
    int i;
    int j;
    int n;
};

using Overlay = std::variant<AnchorGapOverlay, CenterLineOverlay>;

struct FigureStyle {
    double stroke_width = 1.5; // output pixels
    bool labels = false;
    int canvas_width = 800; // output pixel width; height follows the geometry
};

struct FigureSpec {
    ChainSpec chain;
    int n_min = -2;
    int n_max = 3;
    std::vector<Overlay> overlays;
    FigureStyle style;
};

/// Renders a standalone SVG document. All geometry is carried exactly and
/// converted to decimal text only at emission, using the shortest form that
/// round-trips through double, so equal inputs always produce identical
/// bytes. Throws ParameterError for an empty member range or degenerate
/// style, RenderError (naming the overlay) when overlay geometry degenerates.
std::string render_figure(const FigureSpec& fig);

} // namespace arbelos
