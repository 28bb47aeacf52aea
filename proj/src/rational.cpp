#include "arbelos/rational.hpp"

#include <ostream>

namespace arbelos {

namespace {

// Signed decimal integer: optional sign, then digits only. Leading zeros are
// stripped before handing the text to the bignum constructor, which would
// otherwise read them as an octal prefix.
bool normalize_integer_text(std::string_view in, std::string& out) {
    bool negative = false;
    if (!in.empty() && (in.front() == '+' || in.front() == '-')) {
        negative = in.front() == '-';
        in.remove_prefix(1);
    }
    if (in.empty())
        return false;
    for (char ch : in)
        if (ch < '0' || ch > '9')
            return false;
    while (in.size() > 1 && in.front() == '0')
        in.remove_prefix(1);
    out.clear();
    if (negative && in != "0")
        out.push_back('-');
    out.append(in);
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        has_den = true;
    }
    std::string num_text, den_text;
    bool ok = normalize_integer_text(num_part, num_text) &&
              (!has_den || normalize_integer_text(den_part, den_text));
    if (!ok)
        throw ConstructionError("invalid rational literal \"" + std::string(text) + "\"");
    Integer num(num_text);
    Integer den = has_den ? Integer(den_text) : Integer(1);
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string s = num().str();
    if (den() != 1) {
        s += '/';
        s += den().str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace arbelos
