#include "arbelos/inversion.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace arbelos {

Rational orthogonal_power(const Point& p, const Circle& c) {
    Rational k = dist2(p, c.center) - sq(c.geometric_radius());
    if (!k.is_positive())
        throw DomainError("point is on or inside the circle, no orthogonal power exists");
    return k;
}

Point invert(const InversionMap& map, const Point& p) {
    if (p == map.center)
        throw UndefinedImageError("the inversion center has no image");
    Rational s = map.power / dist2(p, map.center);
    return map.center + s * (p - map.center);
}

GeneralizedCircle invert(const InversionMap& map, const Circle& c) {
    Rational rho = c.geometric_radius();
    Rational d2 = dist2(c.center, map.center);
    Rational rho2 = sq(rho);
    if (d2 == rho2) {
        // through the center: image is the line (X - O) . (c - O) = power / 2
        Point nrm = c.center - map.center;
        return make_line(nrm.x, nrm.y,
                         -(nrm.x * map.center.x + nrm.y * map.center.y) - map.power / Rational(2));
    }
    Rational s = map.power / (d2 - rho2);
    return Circle(map.center + s * (c.center - map.center), abs(s) * rho);
}

GeneralizedCircle invert(const InversionMap& map, const LineCoeffs& line) {
    Rational h = -line_eval(line, map.center);
    if (h.is_zero())
        return line; // through the center: fixed as a set
    Integer n2 = line.a * line.a + line.b * line.b;
    Integer root = boost::multiprecision::sqrt(n2);
    if (root * root != n2)
        throw DegenerateGeometryError(
            "line image has irrational radius (normal norm^2 = " + n2.str() + ")");
    Rational s = map.power / (Rational(2) * h);
    Point center = map.center + s * Point{Rational(line.a), Rational(line.b)};
    return Circle(std::move(center), abs(s) * Rational(root));
}

GeneralizedCircle invert(const InversionMap& map, const GeneralizedCircle& g) {
    return std::visit([&](const auto& v) { return invert(map, v); }, g);
}

LadderTrace ladder_trace(const ChainSpec& spec, int n, const Rational& power) {
    InversionMap map(spec.anchor, power);
    auto vertical_image = [&](const Circle& base, std::string_view name) {
        GeneralizedCircle image = invert(map, base);
        const LineCoeffs* line = std::get_if<LineCoeffs>(&image);
        if (!line || !is_vertical(*line))
            throw InternalError("base circle " + std::string(name) +
                                " did not invert to a vertical line");
        return *line;
    };
    LineCoeffs image1 = vertical_image(spec.tangent1, spec.tangent1_name);
    LineCoeffs image2 = vertical_image(spec.tangent2, spec.tangent2_name);
    Rational x1 = vertical_line_x(image1);
    Rational x2 = vertical_line_x(image2);
    Rational width = abs(x1 - x2);
    if (width.is_zero())
        throw InternalError("base circle images coincide");

    Circle rung({(x1 + x2) / Rational(2), Rational(n) * width}, width / Rational(2));

    // Map the rung back by hand so the sign of the scale survives: a rung
    // that surrounds the anchor returns as the member enclosing the arbelos,
    // and its signed radius must come out negative.
    Rational d2 = dist2(rung.center, map.center);
    Rational rho2 = sq(rung.radius);
    if (d2 == rho2)
        throw InternalError("ladder rung passes through the inversion center");
    Rational s = map.power / (d2 - rho2);
    Circle out(map.center + s * (rung.center - map.center), s * rung.radius);

    return {std::move(map), std::move(image1), std::move(image2),
            std::move(x1), std::move(x2), std::move(rung),
            ChainCircle{n, std::move(out)}};
}

ChainCircle ladder_chain_circle(const ChainSpec& spec, int n, const Rational& power) {
    return ladder_trace(spec, n, power).result;
}

} // namespace arbelos
