#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "arbelos/errors.hpp"

namespace arbelos {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar, the only number type used by the geometric core.
///
/// Canonical form is maintained after every operation: the denominator is
/// strictly positive and coprime to the numerator, zero is 0/1, and equality
/// is structural equality of numerator and denominator. Arithmetic never
/// rounds. Floating point exists only behind to_double(), which the renderer
/// calls at emission time.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    /// Throws ConstructionError when den is zero. A negative den is folded
    /// into the numerator so the stored denominator is always positive.
    Rational(Integer num, Integer den) {
        if (den.is_zero())
            throw ConstructionError("rational denominator is zero");
        if (den.sign() < 0) {
            num = -num;
            den = -den;
        }
        value_ = Backend(std::move(num), std::move(den));
    }

    /// Parses "p/q" or a bare integer "p"; either part may carry a sign.
    /// Throws ConstructionError on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    Integer num() const { return boost::multiprecision::numerator(value_); }
    Integer den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_positive() const { return value_.sign() > 0; }
    bool is_negative() const { return value_.sign() < 0; }
    bool is_integer() const { return den() == 1; }

    /// Canonical text form "p/q", shortened to "p" when the denominator is 1.
    std::string str() const;

    /// Nearest double; magnitudes beyond the double range saturate to +-inf.
    double to_double() const { return value_.convert_to<double>(); }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.value_ + y.value_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.value_ - y.value_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.value_ * y.value_); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero())
            throw ArithmeticError("rational division by zero");
        return Rational(x.value_ / y.value_);
    }
    friend Rational operator-(const Rational& x) { return Rational(-x.value_); }

    Rational& operator+=(const Rational& y) { value_ += y.value_; return *this; }
    Rational& operator-=(const Rational& y) { value_ -= y.value_; return *this; }
    Rational& operator*=(const Rational& y) { value_ *= y.value_; return *this; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        if (x.value_ < y.value_) return std::strong_ordering::less;
        if (x.value_ == y.value_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

private:
    using Backend = boost::multiprecision::cpp_rational;

    explicit Rational(Backend v) : value_(std::move(v)) {}

    Backend value_;
};

inline Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }
inline Rational sq(const Rational& x) { return x * x; }

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace arbelos
