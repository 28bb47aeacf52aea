#pragma once

#include <variant>

#include "arbelos/chain.hpp"

namespace arbelos {

/// Circle or line: inversion maps the union of the two kinds onto itself.
using GeneralizedCircle = std::variant<Circle, LineCoeffs>;

/// Inversion about `center` with positive `power` (the squared radius of the
/// pointwise-fixed circle). The map is an involution away from its center.
struct InversionMap {
    Point center;
    Rational power;

    InversionMap(Point c, Rational p) : center(std::move(c)), power(std::move(p)) {
        if (!power.is_positive())
            throw DomainError("inversion power must be positive");
    }
};

/// The power for which inversion about `p` fixes `c` as a set (meets it
/// orthogonally). Defined only when p lies strictly outside the circle;
/// throws DomainError otherwise.
Rational orthogonal_power(const Point& p, const Circle& c);

/// Image of a point; throws UndefinedImageError at the inversion center.
Point invert(const InversionMap& map, const Point& p);

/// Image of a circle: a line when the circle passes through the inversion
/// center, a circle (with positive radius) otherwise.
GeneralizedCircle invert(const InversionMap& map, const Circle& c);

/// Image of a line: the line itself when it passes through the inversion
/// center, a circle through the center otherwise. The image radius involves
/// the norm of the line's normal vector; when that norm is irrational the
/// image cannot be represented and DegenerateGeometryError is thrown.
GeneralizedCircle invert(const InversionMap& map, const LineCoeffs& line);

GeneralizedCircle invert(const InversionMap& map, const GeneralizedCircle& g);

/// Everything one ladder construction produced on the way to member n.
struct LadderTrace {
    InversionMap map;
    LineCoeffs image1;  // image of the first touched base circle
    LineCoeffs image2;  // image of the second
    Rational x1;        // abscissa of image1 (both images are vertical)
    Rational x2;
    Circle rung;        // circle n of the straight ladder between the lines
    ChainCircle result; // the rung mapped back
};

/// Builds member n without the closed forms: inverts the two touched base
/// circles about the anchor into parallel vertical lines, takes circle n of
/// the evenly stacked ladder filling the strip, and maps it back. The result
/// is independent of the chosen power. The member that surrounds the anchor
/// comes back with a negative signed radius.
LadderTrace ladder_trace(const ChainSpec& spec, int n, const Rational& power);

ChainCircle ladder_chain_circle(const ChainSpec& spec, int n, const Rational& power);

inline ChainCircle ladder_chain_circle(const ChainSpec& spec, int n) {
    return ladder_chain_circle(spec, n, Rational(1));
}

} // namespace arbelos
