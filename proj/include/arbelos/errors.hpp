#pragma once

#include <stdexcept>

namespace arbelos {

/// Base class of every error raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid construction of a numeric value (zero denominator, unparsable text).
struct ConstructionError : Error {
    using Error::Error;
};

/// Invalid exact arithmetic (division by zero).
struct ArithmeticError : Error {
    using Error::Error;
};

/// Argument outside an operation's domain (nonpositive arbelos radius,
/// nonpositive inversion power, inversion center inside the target circle).
struct DomainError : Error {
    using Error::Error;
};

/// Structurally invalid index parameters (i = j where distinct indices are
/// required, i + j = 0 where the offset factor is undefined).
struct ParameterError : Error {
    using Error::Error;
};

/// Geometry that admits no unique answer: coincident circles or lines,
/// a line image whose radius would be irrational.
struct DegenerateGeometryError : Error {
    using Error::Error;
};

/// Two objects required to intersect do not intersect.
struct NoIntersectionError : Error {
    using Error::Error;
};

/// The image of the inversion center does not exist.
struct UndefinedImageError : Error {
    using Error::Error;
};

/// A state that is mathematically impossible for valid inputs; always a bug.
struct InternalError : Error {
    using Error::Error;
};

/// Figure assembly failed; wraps degenerate overlay geometry with the
/// offending overlay named in the message.
struct RenderError : Error {
    using Error::Error;
};

} // namespace arbelos
