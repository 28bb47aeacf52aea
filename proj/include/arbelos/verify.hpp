#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arbelos/chain.hpp"

namespace arbelos {

struct FamilyTally {
    long checked = 0;
    long passed = 0;
    long skipped = 0;
};

/// A check that could not run because its geometry admits no unique answer.
struct SkippedCheck {
    std::string identity;
    ChainVariant variant;
    Rational a;
    Rational b;
    std::optional<int> i;
    std::optional<int> j;
    std::optional<int> n;
    std::string reason;

    std::string str() const;
};

/// Aggregated outcome of a verification sweep. Families appear in the order
/// they were first recorded, which verify_chain keeps fixed, so reports are
/// deterministic however the work was distributed.
struct VerifyReport {
    std::vector<std::pair<std::string, FamilyTally>> families;
    std::vector<CheckResult> failures;
    std::vector<SkippedCheck> skipped;

    FamilyTally& family(std::string_view name);
    long total_checked() const;
    long total_passed() const;
    long total_skipped() const;
    bool all_passed() const { return failures.empty(); }

    void merge(VerifyReport other);
};

/// Runs every identity of one configuration with all indices bounded by
/// `bound` (at least 1): member heights, base and consecutive tangencies,
/// anchor gaps, agreement of the two center-line constructions with the
/// line-membership residues, the offset identities with their height
/// cross-check, the specialized offsets, and agreement of the closed forms
/// with the inversion ladder. Degenerate cases are counted as skipped and
/// listed with their reason, never silently dropped.
VerifyReport verify_chain(const ChainSpec& spec, int bound);

/// The stock (a, b) grid swept by grid mode: every ordered pair over
/// {1, 1/2, 2, 3/2, 5/3, 7/2}, including the symmetric diagonal.
std::vector<std::pair<Rational, Rational>> verification_grid();

/// verify_chain over many configurations, fanned out across hardware
/// threads. The merged report is identical to a sequential run because
/// partial reports are merged in input order.
VerifyReport verify_many(const std::vector<ChainSpec>& specs, int bound);

} // namespace arbelos
