#include <doctest.h>

#include "arbelos/chain.hpp"

using namespace arbelos;

namespace {

const ChainSpec alpha11 = configure_chain(Rational(1), Rational(1), ChainVariant::Alpha);
const ChainSpec alpha21 = configure_chain(Rational(2), Rational(1), ChainVariant::Alpha);
const ChainSpec beta11 = configure_chain(Rational(1), Rational(1), ChainVariant::Beta);
const ChainSpec gamma21 = configure_chain(Rational(2), Rational(1), ChainVariant::Gamma);
const ChainSpec gamma11 = configure_chain(Rational(1), Rational(1), ChainVariant::Gamma);

Circle at(long long x_num, long long x_den, long long y_num, long long y_den,
          long long r_num, long long r_den) {
    return Circle({Rational(x_num, x_den), Rational(y_num, y_den)}, Rational(r_num, r_den));
}

} // namespace

TEST_CASE("variant names round trip") {
    CHECK(parse_variant("alpha") == ChainVariant::Alpha);
    CHECK(parse_variant("beta") == ChainVariant::Beta);
    CHECK(parse_variant("gamma") == ChainVariant::Gamma);
    CHECK(to_string(ChainVariant::Gamma) == "gamma");
    CHECK_THROWS_AS(parse_variant("delta"), ParameterError);
}

TEST_CASE("configuration lays out the arbelos") {
    CHECK(alpha11.c == Rational(2));
    CHECK(alpha11.point_a == Point{Rational(-2), Rational(0)});
    CHECK(alpha11.point_b == Point{Rational(2), Rational(0)});
    CHECK(alpha11.base_alpha == Circle({Rational(1), Rational(0)}, Rational(1)));
    CHECK(alpha11.base_beta == Circle({Rational(-1), Rational(0)}, Rational(1)));
    CHECK(alpha11.base_gamma == Circle({Rational(0), Rational(0)}, Rational(2)));
    CHECK(alpha11.anchor == alpha11.point_a);
    CHECK(alpha11.tangent1_name == "beta");
    CHECK(alpha11.tangent2_name == "gamma");

    CHECK(beta11.anchor == Point{Rational(2), Rational(0)});
    CHECK(beta11.tangent1_name == "gamma");
    CHECK(beta11.tangent2_name == "alpha");

    CHECK(gamma21.base_gamma == Circle({Rational(1), Rational(0)}, Rational(3)));
    CHECK(gamma21.anchor == Point{Rational(0), Rational(0)});
    CHECK(gamma21.tangent1_name == "alpha");
    CHECK(gamma21.tangent2_name == "beta");

    CHECK_THROWS_AS(configure_chain(Rational(0), Rational(1), ChainVariant::Alpha),
                    DomainError);
    CHECK_THROWS_AS(configure_chain(Rational(1), Rational(-2), ChainVariant::Beta),
                    DomainError);
}

TEST_CASE("closed-form members match worked examples") {
    CHECK(chain_circle(alpha11, 0).circle == alpha11.base_alpha);
    CHECK(chain_circle(alpha11, 1).circle == at(0, 1, 4, 3, 2, 3));
    CHECK(chain_circle(alpha11, 2).circle == at(-1, 1, 4, 3, 1, 3));
    CHECK(chain_circle(alpha11, 3).circle == at(-16, 11, 12, 11, 2, 11));

    CHECK(chain_circle(alpha21, 1).circle == at(-2, 7, 12, 7, 6, 7));

    CHECK(chain_circle(beta11, 0).circle == beta11.base_beta);
    CHECK(chain_circle(beta11, 1).circle == at(0, 1, 4, 3, 2, 3));

    // the outer chain's member 0 encloses the arbelos: signed radius -c
    CHECK(chain_circle(gamma21, 0).circle.center == Point{Rational(1), Rational(0)});
    CHECK(chain_circle(gamma21, 0).circle.radius == Rational(-3));
    CHECK(chain_circle(gamma21, 1).circle == at(-2, 7, 12, 7, 6, 7));
}

TEST_CASE("members touch what they must touch") {
    Circle d1 = chain_circle(alpha21, 1).circle;
    CHECK(dist2(d1.center, alpha21.base_beta.center) == sq(Rational(13, 7)));
    CHECK(sq(Rational(1) + Rational(6, 7)) == sq(Rational(13, 7)));
    CHECK(dist2(d1.center, alpha21.base_gamma.center) == sq(Rational(15, 7)));
    CHECK(sq(Rational(3) - Rational(6, 7)) == sq(Rational(15, 7)));

    CHECK(tangency_classify(d1, alpha21.base_beta) == Tangency::ExternallyTangent);
    CHECK(tangency_classify(d1, alpha21.base_gamma) == Tangency::InternallyTangent);

    Circle g0 = chain_circle(gamma21, 0).circle;
    Circle g1 = chain_circle(gamma21, 1).circle;
    CHECK(tangency_classify(g0, gamma21.base_alpha) == Tangency::InternallyTangent);
    CHECK(tangency_classify(g0, gamma21.base_beta) == Tangency::InternallyTangent);
    CHECK(tangency_classify(g1, gamma21.base_alpha) == Tangency::ExternallyTangent);
    CHECK(tangency_classify(g0, g1) == Tangency::InternallyTangent);
}

TEST_CASE("index mirror symmetry") {
    for (const ChainSpec* spec : {&alpha11, &alpha21, &beta11, &gamma21}) {
        for (int n = 0; n <= 6; ++n) {
            Circle pos = chain_circle(*spec, n).circle;
            Circle neg = chain_circle(*spec, -n).circle;
            CHECK(pos.center.x == neg.center.x);
            CHECK(pos.center.y == -neg.center.y);
            CHECK(pos.radius == neg.radius);
        }
    }
}

TEST_CASE("center lines: closed form equals the two-point construction") {
    CHECK(center_line_closed_form(alpha11, 0, 1) == LineCoeffs{4, 3, -4});
    CHECK(center_line_closed_form(alpha11, 1, 2) == LineCoeffs{0, 3, -4});
    CHECK(center_line_closed_form(beta11, 0, 1) == LineCoeffs{4, -3, 4});
    CHECK(center_line_closed_form(gamma21, 0, 1) == LineCoeffs{4, 3, -4});
    CHECK(center_line_closed_form(gamma11, 0, 1) == LineCoeffs{1, 0, 0});

    for (const ChainSpec* spec : {&alpha11, &alpha21, &beta11, &gamma21, &gamma11}) {
        for (int i = -4; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                LineCoeffs closed = center_line_closed_form(*spec, i, j);
                CHECK(closed == line_through_centers(*spec, i, j));
                CHECK(line_eval(closed, chain_circle(*spec, i).circle.center) == Rational(0));
                CHECK(line_eval(closed, chain_circle(*spec, j).circle.center) == Rational(0));
            }
    }

    CHECK_THROWS_AS(center_line_closed_form(alpha11, 2, 2), ParameterError);
    CHECK_THROWS_AS(line_through_centers(alpha11, -1, -1), ParameterError);
}

TEST_CASE("anchor line meets the vertical where expected") {
    CHECK(anchor_line_point(alpha11, 0, 1) == Point{Rational(0), Rational(0)});
    CHECK(anchor_line_point(alpha11, 1, 3) == Point{Rational(-16, 11), Rational(4, 11)});
    CHECK(anchor_line_point(beta11, 0, 1) == Point{Rational(0), Rational(0)});
    CHECK(anchor_line_point(gamma21, 1, 0) == Point{Rational(1), Rational(-6)});
    CHECK(anchor_line_point(alpha11, 2, 2) == chain_circle(alpha11, 2).circle.center);
}

TEST_CASE("anchor gap identity") {
    CheckResult res = anchor_gap_check(alpha11, 1, 3);
    CHECK(res.identity == identity::anchor_gap);
    CHECK(res.lhs == Rational(8, 11));
    CHECK(res.rhs == Rational(8, 11));
    CHECK(res.holds);

    CHECK(anchor_gap_check(alpha11, 0, 1).lhs == Rational(4, 3));
    CHECK(anchor_gap_check(beta11, 0, 1).lhs == Rational(4, 3));
    CHECK(anchor_gap_check(gamma21, 1, 0).lhs == Rational(6));
    CHECK(anchor_gap_check(alpha11, 2, 2).lhs == Rational(0));

    for (const ChainSpec* spec : {&alpha11, &alpha21, &beta11, &gamma21})
        for (int i = -5; i <= 5; ++i)
            for (int n = -5; n <= 5; ++n)
                CHECK(anchor_gap_check(*spec, i, n).holds);
}

TEST_CASE("outer chain of the symmetric arbelos is degenerate") {
    CHECK_THROWS_AS(anchor_line_point(gamma11, 0, 1), DegenerateGeometryError);
    CHECK_THROWS_AS(anchor_line_point(gamma11, 1, 2), DegenerateGeometryError);
    CHECK_THROWS_AS(anchor_gap_check(gamma11, 2, -1), DegenerateGeometryError);
    CHECK_THROWS_AS(offset_check(gamma11, 0, 1, 2), DegenerateGeometryError);
    CHECK_THROWS_AS(signed_offset(gamma11, 1, 2, 0), DegenerateGeometryError);
    CHECK_THROWS_AS(intersection_height_check(gamma11, 0, 2, 1), DegenerateGeometryError);
}

TEST_CASE("offset factor") {
    CHECK(offset_factor(0, 1, 2) == Rational(4));
    CHECK(offset_factor(1, 2, 0) == Rational(4, 3));
    CHECK(offset_factor(2, 5, 2) == Rational(0));
    CHECK(offset_factor(-1, 2, 3) == Rational(8));
    CHECK_THROWS_AS(offset_factor(1, -1, 5), ParameterError);
    CHECK_THROWS_AS(offset_factor(3, 3, 5), ParameterError);
}

TEST_CASE("center-line offset identity") {
    CheckResult res = offset_check(alpha11, 0, 1, 2);
    CHECK(res.lhs == Rational(4, 3));
    CHECK(res.rhs == Rational(4, 3));
    CHECK(res.holds);

    CHECK(offset_check(alpha11, 1, 2, 0).lhs == Rational(4, 3));
    CHECK(offset_check(alpha11, 1, 2, 1).lhs == Rational(0));
    CHECK(signed_offset(alpha11, 0, 1, -2) == Rational(4));

    CheckResult height = intersection_height_check(alpha11, 0, 1, 2);
    CHECK(height.lhs == Rational(8, 3));
    CHECK(height.rhs == Rational(8, 3));

    CHECK_THROWS_AS(offset_check(alpha11, 1, -1, 2), ParameterError);
    CHECK_THROWS_AS(offset_check(alpha11, 1, 1, 2), ParameterError);

    for (const ChainSpec* spec : {&alpha11, &alpha21, &beta11, &gamma21})
        for (int i = -4; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                if (i + j == 0)
                    continue;
                for (int n = -4; n <= 4; ++n) {
                    CHECK(offset_check(*spec, i, j, n).holds);
                    CHECK(intersection_height_check(*spec, i, j, n).holds);
                }
            }
}

TEST_CASE("specialized offsets") {
    std::vector<CheckResult> both = special_offset_checks(alpha11, 0, 1, 2);
    REQUIRE(both.size() == 2);
    CHECK(both[0].identity == identity::offset_unit_j);
    CHECK(both[0].lhs == Rational(4, 3));
    CHECK(both[0].rhs == Rational(4, 3));
    CHECK(both[1].identity == identity::offset_antisymmetry);
    CHECK(both[1].lhs == Rational(-8, 3));
    CHECK(both[1].rhs == Rational(-8, 3));

    std::vector<CheckResult> neg = special_offset_checks(alpha11, 0, -1, 2);
    REQUIRE(neg.size() == 2);
    CHECK(neg[0].identity == identity::offset_unit_j);
    CHECK(neg[0].lhs == Rational(-4));
    CHECK(neg[0].rhs == Rational(-4));

    std::vector<CheckResult> dbl = special_offset_checks(alpha11, 0, 2, 3);
    REQUIRE(dbl.size() == 2);
    CHECK(dbl[0].identity == identity::offset_double_j);
    CHECK(dbl[0].lhs == Rational(6, 11));
    CHECK(dbl[0].rhs == Rational(6, 11));

    CHECK(special_offset_checks(alpha11, 3, -3, 1).empty());
    std::vector<CheckResult> plain = special_offset_checks(alpha11, 5, 7, 1);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].identity == identity::offset_antisymmetry);
    CHECK(plain[0].holds);

    for (const ChainSpec* spec : {&alpha11, &alpha21, &beta11, &gamma21})
        for (int j : {1, -1, 2, -2})
            for (int n = -4; n <= 4; ++n)
                for (const CheckResult& res : special_offset_checks(*spec, 0, j, n))
                    CHECK(res.holds);
}

TEST_CASE("check results carry their context") {
    CheckResult res = anchor_gap_check(alpha21, 1, 3);
    CHECK(res.variant == ChainVariant::Alpha);
    CHECK(res.a == Rational(2));
    CHECK(res.b == Rational(1));
    CHECK(res.i == 1);
    CHECK_FALSE(res.j.has_value());
    CHECK(res.n == 3);
    CHECK(res.str().find("anchor_gap") != std::string::npos);
    CHECK(res.str().find("a=2") != std::string::npos);
    CHECK(res.str().find(" ok") != std::string::npos);
}
