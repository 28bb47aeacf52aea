#include "arbelos/chain.hpp"

namespace arbelos {

std::string_view to_string(ChainVariant v) {
    switch (v) {
    case ChainVariant::Alpha: return "alpha";
    case ChainVariant::Beta: return "beta";
    case ChainVariant::Gamma: return "gamma";
    }
    throw InternalError("unknown chain variant");
}

ChainVariant parse_variant(std::string_view text) {
    if (text == "alpha") return ChainVariant::Alpha;
    if (text == "beta") return ChainVariant::Beta;
    if (text == "gamma") return ChainVariant::Gamma;
    throw ParameterError("unknown chain variant \"" + std::string(text) + "\"");
}

ChainSpec configure_chain(const Rational& a, const Rational& b, ChainVariant variant) {
    if (!a.is_positive() || !b.is_positive())
        throw DomainError("arbelos radii must be positive");
    Rational c = a + b;

    Point point_a{-Rational(2) * b, 0};
    Point point_b{Rational(2) * a, 0};
    Point point_c{0, 0};

    Circle alpha({a, Rational(0)}, a);
    Circle beta({-b, Rational(0)}, b);
    Circle gamma({a - b, Rational(0)}, c);

    ChainSpec spec{a, b, c, variant, point_a, point_b, point_c,
                   alpha, beta, gamma,
                   point_c, alpha, beta, "alpha", "beta"};
    switch (variant) {
    case ChainVariant::Alpha:
        spec.anchor = point_a;
        spec.tangent1 = beta;
        spec.tangent2 = gamma;
        spec.tangent1_name = "beta";
        spec.tangent2_name = "gamma";
        break;
    case ChainVariant::Beta:
        spec.anchor = point_b;
        spec.tangent1 = gamma;
        spec.tangent2 = alpha;
        spec.tangent1_name = "gamma";
        spec.tangent2_name = "alpha";
        break;
    case ChainVariant::Gamma:
        break; // defaults above
    }
    return spec;
}

ChainCircle chain_circle(const ChainSpec& spec, int n) {
    const Rational& a = spec.a;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    Rational n2(Integer(n) * n);
    Rational q, x;
    switch (spec.variant) {
    case ChainVariant::Alpha:
        q = n2 * sq(a) + b * c;
        x = -Rational(2) * b + b * c * (b + c) / q;
        break;
    case ChainVariant::Beta:
        q = n2 * sq(b) + c * a;
        x = Rational(2) * a - c * a * (c + a) / q;
        break;
    case ChainVariant::Gamma:
        q = n2 * sq(c) - a * b;
        x = a * b * (b - a) / q;
        break;
    }
    Rational r = a * b * c / q;
    Rational y = Rational(2LL * n) * r;
    return {n, Circle({std::move(x), std::move(y)}, std::move(r))};
}

std::string CheckResult::str() const {
    std::string s(identity);
    s += " [";
    s += to_string(variant);
    s += " a=" + a.str() + " b=" + b.str();
    if (i) s += " i=" + std::to_string(*i);
    if (j) s += " j=" + std::to_string(*j);
    if (n) s += " n=" + std::to_string(*n);
    s += "] lhs=" + lhs.str() + " rhs=" + rhs.str();
    s += holds ? " ok" : " FAIL";
    return s;
}

CheckResult make_check(const ChainSpec& spec, std::string_view identity,
                       std::optional<int> i, std::optional<int> j, std::optional<int> n,
                       Rational lhs, Rational rhs) {
    bool holds = lhs == rhs;
    return {std::string(identity), spec.variant, spec.a, spec.b,
            i, j, n, std::move(lhs), std::move(rhs), holds};
}

namespace {

std::string param_suffix(const ChainSpec& spec) {
    return " (variant=" + std::string(to_string(spec.variant)) +
           " a=" + spec.a.str() + " b=" + spec.b.str() + ")";
}

void require_distinct(int i, int j) {
    if (i == j)
        throw ParameterError("indices must be distinct, got i = j = " + std::to_string(i));
}

void require_offset_pair(int i, int j) {
    require_distinct(i, j);
    if (i + j == 0)
        throw ParameterError("offset factor is undefined for i + j = 0, got i = " +
                             std::to_string(i) + ", j = " + std::to_string(j));
}

// Height at which the line through centers D_i and D_j crosses the vertical
// through D_n.
Rational intersection_height(const ChainSpec& spec, int i, int j, int n) {
    LineCoeffs line = center_line_closed_form(spec, i, j);
    Rational xn = chain_circle(spec, n).circle.center.x;
    if (is_vertical(line)) {
        if (vertical_line_x(line) == xn)
            throw DegenerateGeometryError(
                "center line coincides with the vertical through the target center" +
                param_suffix(spec));
        throw NoIntersectionError(
            "center line is vertical and misses the target center" + param_suffix(spec));
    }
    return line_y_at(line, xn);
}

} // namespace

LineCoeffs line_through_centers(const ChainSpec& spec, int i, int j) {
    require_distinct(i, j);
    return line_through(chain_circle(spec, i).circle.center,
                        chain_circle(spec, j).circle.center);
}

LineCoeffs center_line_closed_form(const ChainSpec& spec, int i, int j) {
    require_distinct(i, j);
    const Rational& a = spec.a;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    Rational ij(Integer(i) * j);
    Rational ipj(Integer(i) + j);
    switch (spec.variant) {
    case ChainVariant::Alpha:
        return make_line(Rational(2) * (b * c - sq(a) * ij),
                         a * (b + c) * ipj,
                         -Rational(2) * b * (Rational(2) * sq(a) * ij - c * (b - c)));
    case ChainVariant::Beta:
        return make_line(Rational(2) * (c * a - sq(b) * ij),
                         -b * (c + a) * ipj,
                         Rational(2) * a * (Rational(2) * sq(b) * ij + c * (c - a)));
    case ChainVariant::Gamma:
        return make_line(Rational(2) * (a * b + sq(c) * ij),
                         c * (a - b) * ipj,
                         -Rational(2) * a * b * (a - b));
    }
    throw InternalError("unknown chain variant");
}

Point anchor_line_point(const ChainSpec& spec, int i, int n) {
    Point di = chain_circle(spec, i).circle.center;
    if (di == spec.anchor)
        throw DegenerateGeometryError(
            "anchor coincides with the pivot center" + param_suffix(spec));
    LineCoeffs ray = line_through(spec.anchor, di);
    Rational xn = chain_circle(spec, n).circle.center.x;
    if (is_vertical(ray)) {
        if (vertical_line_x(ray) == xn)
            throw DegenerateGeometryError(
                "anchor line coincides with the vertical through the target center" +
                param_suffix(spec));
        throw NoIntersectionError(
            "anchor line is vertical and misses the target center" + param_suffix(spec));
    }
    return {xn, line_y_at(ray, xn)};
}

CheckResult anchor_gap_check(const ChainSpec& spec, int i, int n) {
    ChainCircle cn = chain_circle(spec, n);
    Point h = anchor_line_point(spec, i, n);
    Rational lhs = abs(cn.circle.center.y - h.y);
    Rational rhs = Rational(2LL * std::abs(static_cast<long long>(n) - i)) *
                   cn.circle.geometric_radius();
    return make_check(spec, identity::anchor_gap, i, std::nullopt, n,
                       std::move(lhs), std::move(rhs));
}

Rational offset_factor(int i, int j, int n) {
    require_offset_pair(i, j);
    Integer num = 2 * (Integer(n) - i) * (Integer(n) - j);
    return Rational(std::move(num), Integer(i) + j);
}

Rational signed_offset(const ChainSpec& spec, int i, int j, int n) {
    require_offset_pair(i, j);
    return intersection_height(spec, i, j, n) - chain_circle(spec, n).circle.center.y;
}

CheckResult offset_check(const ChainSpec& spec, int i, int j, int n) {
    require_offset_pair(i, j);
    ChainCircle cn = chain_circle(spec, n);
    Rational h = intersection_height(spec, i, j, n);
    Rational h_closed = Rational(2) * Rational(Integer(n) * n + Integer(i) * j) *
                        cn.circle.radius / Rational(Integer(i) + j);
    if (h != h_closed)
        throw InternalError("intersection height disagrees with its closed form at i=" +
                            std::to_string(i) + " j=" + std::to_string(j) +
                            " n=" + std::to_string(n) + param_suffix(spec));
    Rational d = h - cn.circle.center.y;
    Rational rhs = offset_factor(i, j, n) * cn.circle.radius;
    return make_check(spec, identity::offset_formula, i, j, n, std::move(d), std::move(rhs));
}

CheckResult intersection_height_check(const ChainSpec& spec, int i, int j, int n) {
    require_offset_pair(i, j);
    Rational h = intersection_height(spec, i, j, n);
    Rational lhs = h * Rational(Integer(i) + j);
    Rational rhs = Rational(2) * Rational(Integer(n) * n + Integer(i) * j) *
                   chain_circle(spec, n).circle.radius;
    return make_check(spec, identity::offset_height, i, j, n, std::move(lhs), std::move(rhs));
}

std::vector<CheckResult> special_offset_checks(const ChainSpec& spec, int i, int j, int n) {
    std::vector<CheckResult> out;
    if (i == 0 && (j == 1 || j == -1 || j == 2 || j == -2)) {
        Rational d = signed_offset(spec, i, j, n);
        Rational rn = chain_circle(spec, n).circle.radius;
        Integer nn(n);
        Integer scale;
        switch (j) {
        case 1: scale = 2 * nn * (nn - 1); break;
        case -1: scale = -2 * nn * (nn + 1); break;
        case 2: scale = nn * (nn - 2); break;
        default: scale = -nn * (nn + 2); break;
        }
        auto id = (j == 1 || j == -1) ? identity::offset_unit_j : identity::offset_double_j;
        out.push_back(make_check(spec, id, i, j, n, std::move(d), Rational(scale) * rn));
    }
    if (i != j && i != -j) {
        Rational gap = signed_offset(spec, i, j, n) - signed_offset(spec, i, j, -n);
        Rational rhs = Rational(-4LL * n) * chain_circle(spec, n).circle.radius;
        out.push_back(make_check(spec, identity::offset_antisymmetry, i, j, n,
                                  std::move(gap), std::move(rhs)));
    }
    return out;
}

} // namespace arbelos
