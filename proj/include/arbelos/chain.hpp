#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbelos/geometry.hpp"

namespace arbelos {

/// Which hole of the arbelos the chain fills. The variant fixes the anchor
/// point shared by every member and the two base circles each member must
/// touch:
///   Alpha fills the left lune, anchored at A, touching beta and gamma.
///   Beta fills the right lune, anchored at B, touching gamma and alpha.
///   Gamma fills the outside, anchored at C, touching alpha and beta.
enum class ChainVariant {
    Alpha,
    Beta,
    Gamma,
};

std::string_view to_string(ChainVariant v);

/// Parses "alpha", "beta" or "gamma"; throws ParameterError otherwise.
ChainVariant parse_variant(std::string_view text);

/// A fully resolved chain configuration on the arbelos with inner diameters
/// 2a (right) and 2b (left) on segment AB, cusp C at the origin.
struct ChainSpec {
    Rational a;
    Rational b;
    Rational c; // a + b

    ChainVariant variant;

    Point point_a; // (-2b, 0)
    Point point_b; // (2a, 0)
    Point point_c; // origin

    Circle base_alpha; // on diameter BC
    Circle base_beta;  // on diameter CA
    Circle base_gamma; // on diameter AB

    Point anchor; // common point of the whole chain

    Circle tangent1; // first base circle every member touches
    Circle tangent2; // second one
    std::string_view tangent1_name;
    std::string_view tangent2_name;
};

/// Builds the configuration; throws DomainError unless a > 0 and b > 0.
ChainSpec configure_chain(const Rational& a, const Rational& b, ChainVariant variant);

/// One chain member, indexed over all integers. Index 0 is the base circle
/// itself for the two lune chains; for the outer chain it is the enclosing
/// circle on diameter AB, carried with a negative signed radius.
struct ChainCircle {
    int n;
    Circle circle;

    bool operator==(const ChainCircle&) const = default;
};

/// Member n from the closed forms. One formula per variant covers every
/// index, including 0 and the negatives.
ChainCircle chain_circle(const ChainSpec& spec, int n);

/// Names under which checked identities are counted and reported.
namespace identity {
inline constexpr std::string_view pappus_height = "pappus_height";
inline constexpr std::string_view line_match = "line_match";
inline constexpr std::string_view line_residue = "line_residue";
inline constexpr std::string_view anchor_gap = "anchor_gap";
inline constexpr std::string_view offset_formula = "offset_formula";
inline constexpr std::string_view offset_height = "offset_height";
inline constexpr std::string_view offset_unit_j = "offset_unit_j";
inline constexpr std::string_view offset_double_j = "offset_double_j";
inline constexpr std::string_view offset_antisymmetry = "offset_antisymmetry";
inline constexpr std::string_view tangency_base = "tangency_base";
inline constexpr std::string_view tangency_consecutive = "tangency_consecutive";
inline constexpr std::string_view ladder_equivalence = "ladder_equivalence";
} // namespace identity

/// Outcome of one exact identity check. holds is true exactly when lhs and
/// rhs compare equal; parameters not used by the identity stay empty.
struct CheckResult {
    std::string identity;
    ChainVariant variant;
    Rational a;
    Rational b;
    std::optional<int> i;
    std::optional<int> j;
    std::optional<int> n;
    Rational lhs;
    Rational rhs;
    bool holds;

    std::string str() const;
};

/// Assembles a CheckResult for the given configuration; holds is lhs == rhs.
CheckResult make_check(const ChainSpec& spec, std::string_view identity,
                       std::optional<int> i, std::optional<int> j, std::optional<int> n,
                       Rational lhs, Rational rhs);

/// Line through the centers of members i and j, computed from the two
/// centers. Throws ParameterError when i == j.
LineCoeffs line_through_centers(const ChainSpec& spec, int i, int j);

/// The same line from the one-row closed form in a, b, i, j. Agreement with
/// line_through_centers over all index pairs is one of the verified
/// identities. Throws ParameterError when i == j.
LineCoeffs center_line_closed_form(const ChainSpec& spec, int i, int j);

/// Intersection H of the line through the anchor and center D_i with the
/// vertical through the center D_n. Throws DegenerateGeometryError when that
/// anchor line is itself vertical (the outer chain of a symmetric arbelos,
/// where anchor and every center share the y-axis), NoIntersectionError when
/// it is vertical but misses D_n; neither can occur elsewhere.
Point anchor_line_point(const ChainSpec& spec, int i, int n);

/// Checks |D_n H| = 2|n - i| |r_n| with H from anchor_line_point.
CheckResult anchor_gap_check(const ChainSpec& spec, int i, int n);

/// The scale 2(n - i)(n - j) / (i + j) relating the center-line offset to
/// r_n. Throws ParameterError when i == j or i + j == 0.
Rational offset_factor(int i, int j, int n);

/// Signed height gap d = h - y_n, where h is the height at which the line
/// through centers D_i, D_j crosses the vertical through D_n. Same parameter
/// and degeneracy rules as offset_check.
Rational signed_offset(const ChainSpec& spec, int i, int j, int n);

/// Checks d = offset_factor(i, j, n) * r_n, cross-checking on the way that
/// h * (i + j) = 2(n^2 + ij) r_n; a cross-check failure is an InternalError.
/// Throws ParameterError when i == j or i + j == 0, DegenerateGeometryError
/// when the center line degenerates (outer chain, symmetric arbelos).
CheckResult offset_check(const ChainSpec& spec, int i, int j, int n);

/// The cross-check above as a reportable identity in its own right:
/// lhs = h * (i + j), rhs = 2(n^2 + ij) r_n.
CheckResult intersection_height_check(const ChainSpec& spec, int i, int j, int n);

/// Specialized offset identities. For i = 0 and j in {1, -1, 2, -2} the
/// offset collapses to an integer-coefficient multiple of r_n; for any pair
/// with i != -j the offsets at n and -n differ by -4n r_n. Returns every
/// check applicable to (i, j), possibly none.
std::vector<CheckResult> special_offset_checks(const ChainSpec& spec, int i, int j, int n);

} // namespace arbelos
