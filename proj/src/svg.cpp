#include "arbelos/svg.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>

namespace arbelos {

namespace {

// Shortest decimal that parses back to exactly the same double.
std::string fmt(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        throw InternalError("number formatting failed");
    return std::string(buf, end);
}

std::string fmt(const Rational& v) { return fmt(v.to_double()); }

// Model y points up, image y points down.
std::string fmt_y(const Rational& v) { return fmt((-v).to_double()); }

struct Seg {
    Point p;
    Point q;
    const char* cls;
};

struct Circ {
    Point center;
    Rational radius; // geometric, positive
    const char* cls;
};

struct Cross {
    Point at;
    Rational arm;
};

struct TextLabel {
    Point at;
    std::string text;
};

struct Bounds {
    bool any = false;
    Rational min_x, max_x, min_y, max_y;

    void add(const Point& p) {
        if (!any) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            any = true;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

std::string escape_text(std::string_view in) {
    std::string out;
    for (char ch : in) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string describe(const Overlay& ov) {
    if (const auto* gap = std::get_if<AnchorGapOverlay>(&ov))
        return "anchor-gap i=" + std::to_string(gap->i) + " n=" + std::to_string(gap->n);
    const auto& cl = std::get<CenterLineOverlay>(ov);
    return "center-line i=" + std::to_string(cl.i) + " j=" + std::to_string(cl.j) +
           " n=" + std::to_string(cl.n);
}

} // namespace

std::string render_figure(const FigureSpec& fig) {
    const FigureStyle& style = fig.style;
    if (!(style.stroke_width > 0))
        throw ParameterError("stroke width must be positive");
    if (style.canvas_width <= 0)
        throw ParameterError("canvas width must be positive");
    if (fig.n_min > fig.n_max)
        throw ParameterError("empty member index range");

    const ChainSpec& spec = fig.chain;
    std::vector<Seg> segs;
    std::vector<Circ> circles;
    std::vector<Cross> crosses;
    std::vector<TextLabel> labels;

    segs.push_back({spec.point_a, spec.point_b, "axis"});
    for (const Circle* base : {&spec.base_alpha, &spec.base_beta, &spec.base_gamma})
        circles.push_back({base->center, base->geometric_radius(), "base"});
    for (int n = fig.n_min; n <= fig.n_max; ++n) {
        ChainCircle member = chain_circle(spec, n);
        circles.push_back({member.circle.center, member.circle.geometric_radius(), "chain"});
    }

    if (style.labels) {
        Rational drop = -spec.c / Rational(8);
        labels.push_back({{spec.point_a.x, drop}, "A"});
        labels.push_back({{spec.point_b.x, drop}, "B"});
        labels.push_back({{spec.point_c.x, drop}, "C"});
    }

    int index = 0;
    for (const Overlay& overlay : fig.overlays) {
        ++index;
        try {
            if (const auto* gap = std::get_if<AnchorGapOverlay>(&overlay)) {
                ChainCircle cn = chain_circle(spec, gap->n);
                Point h = anchor_line_point(spec, gap->i, gap->n);
                Point reach = spec.anchor + Rational(11, 10) * (h - spec.anchor);
                segs.push_back({spec.anchor, reach, "overlay"});

                Rational pad = cn.circle.geometric_radius() / Rational(2);
                Rational lo = std::min({Rational(0), cn.circle.center.y, h.y}) - pad;
                Rational hi = std::max({Rational(0), cn.circle.center.y, h.y}) + pad;
                const Rational& xn = cn.circle.center.x;
                segs.push_back({{xn, lo}, {xn, hi}, "overlay"});

                Rational arm = cn.circle.geometric_radius() / Rational(4);
                crosses.push_back({cn.circle.center, arm});
                crosses.push_back({h, arm});
                if (style.labels) {
                    labels.push_back({h + Point{arm, arm}, "H"});
                    labels.push_back({cn.circle.center + Point{arm, arm}, "D"});
                }
            } else {
                const auto& cl = std::get<CenterLineOverlay>(overlay);
                ChainCircle cn = chain_circle(spec, cl.n);
                Rational d = signed_offset(spec, cl.i, cl.j, cl.n);
                Point meet{cn.circle.center.x, cn.circle.center.y + d};
                LineCoeffs line = center_line_closed_form(spec, cl.i, cl.j);

                Rational xi = chain_circle(spec, cl.i).circle.center.x;
                Rational xj = chain_circle(spec, cl.j).circle.center.x;
                Rational lo = std::min({xi, xj, meet.x});
                Rational hi = std::max({xi, xj, meet.x});
                Rational slack = (hi - lo) / Rational(10);
                lo -= slack;
                hi += slack;
                segs.push_back({{lo, line_y_at(line, lo)}, {hi, line_y_at(line, hi)}, "overlay"});

                Rational pad = cn.circle.geometric_radius() / Rational(2);
                Rational y_lo = std::min(cn.circle.center.y, meet.y) - pad;
                Rational y_hi = std::max(cn.circle.center.y, meet.y) + pad;
                const Rational& xn = cn.circle.center.x;
                segs.push_back({{xn, y_lo}, {xn, y_hi}, "overlay"});

                Rational arm = cn.circle.geometric_radius() / Rational(4);
                crosses.push_back({cn.circle.center, arm});
                crosses.push_back({meet, arm});
                if (style.labels) {
                    labels.push_back({meet + Point{arm, arm}, "P"});
                    labels.push_back({cn.circle.center + Point{arm, arm}, "D"});
                }
            }
        } catch (const DegenerateGeometryError& e) {
            throw RenderError("overlay " + std::to_string(index) + " (" + describe(overlay) +
                              ") is degenerate: " + e.what());
        } catch (const NoIntersectionError& e) {
            throw RenderError("overlay " + std::to_string(index) + " (" + describe(overlay) +
                              ") has no intersection: " + e.what());
        }
    }

    Bounds box;
    for (const Seg& s : segs) {
        box.add(s.p);
        box.add(s.q);
    }
    for (const Circ& c : circles) {
        box.add({c.center.x - c.radius, c.center.y - c.radius});
        box.add({c.center.x + c.radius, c.center.y + c.radius});
    }
    for (const Cross& m : crosses) {
        box.add({m.at.x - m.arm, m.at.y - m.arm});
        box.add({m.at.x + m.arm, m.at.y + m.arm});
    }
    for (const TextLabel& l : labels)
        box.add(l.at);

    Rational margin_x = (box.max_x - box.min_x) / Rational(20);
    Rational margin_y = (box.max_y - box.min_y) / Rational(20);
    box.min_x -= margin_x;
    box.max_x += margin_x;
    box.min_y -= margin_y;
    box.max_y += margin_y;

    double view_w = (box.max_x - box.min_x).to_double();
    double view_h = (box.max_y - box.min_y).to_double();
    double stroke = style.stroke_width * view_w / style.canvas_width;
    double font = view_w / 28.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    svg += fmt(static_cast<double>(style.canvas_width));
    svg += "\" height=\"" + fmt(style.canvas_width * view_h / view_w);
    svg += "\" viewBox=\"" + fmt(box.min_x) + " " + fmt_y(box.max_y) + " " +
           fmt(view_w) + " " + fmt(view_h) + "\">\n";
    svg += "<title>" +
           escape_text("pappus chain (" + std::string(to_string(spec.variant)) +
                       ", a=" + spec.a.str() + ", b=" + spec.b.str() + ")") +
           "</title>\n";
    svg += "<style>\n"
           ".axis{stroke:#909090;}\n"
           ".base{stroke:#20242c;}\n"
           ".chain{stroke:#1f6fb4;}\n"
           ".overlay{stroke:#c81e3c;}\n"
           ".mark{stroke:#c81e3c;}\n"
           "text{fill:#20242c;stroke:none;font-family:sans-serif;font-size:" +
           fmt(font) + "px;text-anchor:middle;}\n</style>\n";
    svg += "<g fill=\"none\" stroke-width=\"" + fmt(stroke) + "\" stroke-linecap=\"round\">\n";

    for (const Seg& s : segs)
        svg += "<line class=\"" + std::string(s.cls) + "\" x1=\"" + fmt(s.p.x) +
               "\" y1=\"" + fmt_y(s.p.y) + "\" x2=\"" + fmt(s.q.x) +
               "\" y2=\"" + fmt_y(s.q.y) + "\"/>\n";
    for (const Circ& c : circles)
        svg += "<circle class=\"" + std::string(c.cls) + "\" cx=\"" + fmt(c.center.x) +
               "\" cy=\"" + fmt_y(c.center.y) + "\" r=\"" + fmt(c.radius) + "\"/>\n";
    for (const Cross& m : crosses)
        svg += "<path class=\"mark\" d=\"M " + fmt(m.at.x - m.arm) + " " + fmt_y(m.at.y) +
               " L " + fmt(m.at.x + m.arm) + " " + fmt_y(m.at.y) +
               " M " + fmt(m.at.x) + " " + fmt_y(m.at.y - m.arm) +
               " L " + fmt(m.at.x) + " " + fmt_y(m.at.y + m.arm) + "\"/>\n";
    for (const TextLabel& l : labels)
        svg += "<text x=\"" + fmt(l.at.x) + "\" y=\"" + fmt_y(l.at.y) + "\">" +
               escape_text(l.text) + "</text>\n";

    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace arbelos
