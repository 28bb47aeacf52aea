#include "arbelos/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace arbelos {

namespace mp = boost::multiprecision;

std::string LineCoeffs::str() const {
    return "(" + a.str() + ")x + (" + b.str() + ")y + (" + c.str() + ") = 0";
}

LineCoeffs make_line(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() && b.is_zero())
        throw DegenerateGeometryError("line with zero normal vector");
    Integer scale = mp::lcm(mp::lcm(a.den(), b.den()), c.den());
    Integer ia = a.num() * (scale / a.den());
    Integer ib = b.num() * (scale / b.den());
    Integer ic = c.num() * (scale / c.den());
    Integer g = mp::gcd(mp::gcd(ia, ib), ic);
    ia /= g;
    ib /= g;
    ic /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return {std::move(ia), std::move(ib), std::move(ic)};
}

LineCoeffs line_through(const Point& p, const Point& q) {
    if (p == q)
        throw DegenerateGeometryError("line through two coincident points");
    Point d = q - p;
    return make_line(d.y, -d.x, d.x * p.y - d.y * p.x);
}

Rational line_eval(const LineCoeffs& line, const Point& p) {
    return Rational(line.a) * p.x + Rational(line.b) * p.y + Rational(line.c);
}

Rational line_y_at(const LineCoeffs& line, const Rational& x) {
    if (is_vertical(line))
        throw InternalError("height requested on a vertical line");
    return -(Rational(line.a) * x + Rational(line.c)) / Rational(line.b);
}

Rational vertical_line_x(const LineCoeffs& line) {
    if (!is_vertical(line))
        throw InternalError("abscissa requested on a non-vertical line");
    return -Rational(line.c) / Rational(line.a);
}

const char* to_string(Tangency t) {
    switch (t) {
    case Tangency::ExternallyTangent: return "external";
    case Tangency::InternallyTangent: return "internal";
    case Tangency::NotTangent: return "none";
    }
    throw InternalError("unknown tangency kind");
}

Tangency tangency_classify(const Circle& c1, const Circle& c2) {
    Rational r1 = c1.geometric_radius();
    Rational r2 = c2.geometric_radius();
    if (c1.center == c2.center && r1 == r2)
        throw DegenerateGeometryError("tangency of identical circles");
    Rational d2 = dist2(c1.center, c2.center);
    if (d2 == sq(r1 + r2))
        return Tangency::ExternallyTangent;
    if (d2 == sq(r1 - r2))
        return Tangency::InternallyTangent;
    return Tangency::NotTangent;
}

} // namespace arbelos
