#include <doctest.h>

#include "arbelos/export.hpp"
#include "arbelos/verify.hpp"

using namespace arbelos;

namespace {

const FamilyTally& family_of(const VerifyReport& report, std::string_view name) {
    for (const auto& [key, tally] : report.families)
        if (key == name)
            return tally;
    static FamilyTally empty;
    return empty;
}

} // namespace

TEST_CASE("sweep of one regular configuration") {
    ChainSpec spec = configure_chain(Rational(1), Rational(1), ChainVariant::Alpha);
    VerifyReport report = verify_chain(spec, 3);

    CHECK(report.all_passed());
    CHECK(report.total_skipped() == 0);
    CHECK(report.failures.empty());
    CHECK(report.skipped.empty());

    CHECK(family_of(report, identity::pappus_height).checked == 7);
    CHECK(family_of(report, identity::tangency_base).checked == 14);
    CHECK(family_of(report, identity::tangency_consecutive).checked == 6);
    CHECK(family_of(report, identity::anchor_gap).checked == 49);
    CHECK(family_of(report, identity::line_match).checked == 21);
    CHECK(family_of(report, identity::line_residue).checked == 21);
    CHECK(family_of(report, identity::offset_formula).checked == 126);
    CHECK(family_of(report, identity::offset_height).checked == 126);
    CHECK(family_of(report, identity::offset_antisymmetry).checked == 126);
    CHECK(family_of(report, identity::offset_unit_j).checked == 14);
    CHECK(family_of(report, identity::offset_double_j).checked == 14);
    CHECK(family_of(report, identity::ladder_equivalence).checked == 7);

    CHECK(report.total_checked() == 7 + 14 + 6 + 49 + 21 + 21 + 126 + 126 + 126 + 14 + 14 + 7);
    CHECK(report.total_passed() == report.total_checked());

    CHECK_THROWS_AS(verify_chain(spec, 0), ParameterError);
}

TEST_CASE("sweep skips the degenerate outer chain without failing") {
    ChainSpec spec = configure_chain(Rational(1), Rational(1), ChainVariant::Gamma);
    VerifyReport report = verify_chain(spec, 2);

    CHECK(report.all_passed());
    CHECK(report.total_skipped() > 0);

    const FamilyTally& gap = family_of(report, identity::anchor_gap);
    CHECK(gap.checked == 0);
    CHECK(gap.skipped == 25);

    CHECK(family_of(report, identity::offset_formula).checked == 0);
    CHECK(family_of(report, identity::offset_formula).skipped == 40);
    CHECK(family_of(report, identity::offset_unit_j).skipped == 10);
    CHECK(family_of(report, identity::offset_double_j).skipped == 10);
    CHECK(family_of(report, identity::offset_antisymmetry).skipped == 40);

    // everything that does not need the anchor line still runs
    CHECK(family_of(report, identity::pappus_height).checked == 5);
    CHECK(family_of(report, identity::line_match).checked == 10);
    CHECK(family_of(report, identity::tangency_base).checked == 10);
    CHECK(family_of(report, identity::ladder_equivalence).checked == 5);

    for (const SkippedCheck& skip : report.skipped) {
        CHECK(skip.variant == ChainVariant::Gamma);
        CHECK(skip.a == Rational(1));
        CHECK(skip.b == Rational(1));
        CHECK_FALSE(skip.reason.empty());
        CHECK(skip.str().find("skipped") != std::string::npos);
    }
}

TEST_CASE("grid covers all ordered pairs") {
    auto grid = verification_grid();
    CHECK(grid.size() == 36);
    CHECK(grid.front() == std::pair{Rational(1), Rational(1)});
    int diagonal = 0;
    for (const auto& [a, b] : grid)
        if (a == b)
            ++diagonal;
    CHECK(diagonal == 6);
}

TEST_CASE("parallel sweep equals sequential sweep") {
    std::vector<ChainSpec> specs;
    for (ChainVariant v : {ChainVariant::Alpha, ChainVariant::Beta, ChainVariant::Gamma})
        for (auto [a, b] : {std::pair{Rational(1), Rational(1)},
                            std::pair{Rational(3, 2), Rational(1)},
                            std::pair{Rational(5, 3), Rational(7, 2)}})
            specs.push_back(configure_chain(a, b, v));

    VerifyReport parallel = verify_many(specs, 2);
    VerifyReport again = verify_many(specs, 2);
    VerifyReport sequential;
    for (const ChainSpec& spec : specs)
        sequential.merge(verify_chain(spec, 2));

    CHECK(report_document(parallel) == report_document(sequential));
    CHECK(report_document(parallel).dump(2) == report_document(again).dump(2));
    CHECK(parallel.all_passed());
    CHECK(parallel.total_checked() == sequential.total_checked());
    CHECK(parallel.total_skipped() == sequential.total_skipped());
}

TEST_CASE("report document shape") {
    ChainSpec spec = configure_chain(Rational(1), Rational(1), ChainVariant::Gamma);
    Json doc = report_document(verify_chain(spec, 2));

    CHECK(doc["all_passed"] == true);
    CHECK(doc["total_checked"].get<long>() > 0);
    CHECK(doc["total_skipped"].get<long>() > 0);
    CHECK(doc["failures"].is_array());
    CHECK(doc["failures"].empty());
    CHECK(doc["skipped"].is_array());
    CHECK_FALSE(doc["skipped"].empty());
    CHECK(doc["families"]["pappus_height"]["checked"].get<long>() == 5);
    const Json& first_skip = doc["skipped"].front();
    CHECK(first_skip["variant"] == "gamma");
    CHECK(first_skip.contains("reason"));
}
