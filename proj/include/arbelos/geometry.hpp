#pragma once

#include <string>

#include "arbelos/rational.hpp"

namespace arbelos {

/// Exact point in the plane; also used as a displacement vector.
struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point&) const = default;
};

inline Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }
inline Rational norm2(const Point& p) { return dot(p, p); }
inline Rational dist2(const Point& p, const Point& q) { return norm2(p - q); }

/// Circle with exact center and exact nonzero signed radius.
///
/// A negative radius marks a member that encloses its neighbours instead of
/// sitting beside them; the point set is determined by |radius| alone, which
/// geometric_radius() returns. Equality is structural and sign-sensitive.
struct Circle {
    Point center;
    Rational radius;

    Circle(Point c, Rational r) : center(std::move(c)), radius(std::move(r)) {
        if (radius.is_zero())
            throw DegenerateGeometryError("circle with zero radius");
    }

    Rational geometric_radius() const { return abs(radius); }

    bool operator==(const Circle&) const = default;
};

/// Line a*x + b*y + c = 0 in normalized form: the coefficients are integers
/// with no common factor and the first nonzero of (a, b) is positive. Two
/// lines are equal as point sets exactly when their triples compare equal.
struct LineCoeffs {
    Integer a;
    Integer b;
    Integer c;

    bool operator==(const LineCoeffs&) const = default;

    std::string str() const;
};

/// Normalizes arbitrary rational coefficients. Throws DegenerateGeometryError
/// when a and b are both zero.
LineCoeffs make_line(const Rational& a, const Rational& b, const Rational& c);

/// Line through two distinct points; throws DegenerateGeometryError when the
/// points coincide.
LineCoeffs line_through(const Point& p, const Point& q);

/// Value of a*x + b*y + c at the point; zero exactly on the line.
Rational line_eval(const LineCoeffs& line, const Point& p);

inline bool is_vertical(const LineCoeffs& line) { return line.b == 0; }

/// Height of a non-vertical line at abscissa x. Calling this on a vertical
/// line is a bug, reported as InternalError.
Rational line_y_at(const LineCoeffs& line, const Rational& x);

/// Abscissa of a vertical line; InternalError when the line is not vertical.
Rational vertical_line_x(const LineCoeffs& line);

enum class Tangency {
    ExternallyTangent,
    InternallyTangent,
    NotTangent,
};

const char* to_string(Tangency t);

/// Classifies the contact of two circles from squared center distance against
/// squared radius sum and difference, using geometric radii. Throws
/// DegenerateGeometryError when the circles have identical point sets.
Tangency tangency_classify(const Circle& c1, const Circle& c2);

} // namespace arbelos
