#include "arbelos/verify.hpp"

#include <cstdlib>
#include <future>
#include <thread>

#include "arbelos/inversion.hpp"

namespace arbelos {

std::string SkippedCheck::str() const {
    std::string s = identity + " [" + std::string(to_string(variant)) +
                    " a=" + a.str() + " b=" + b.str();
    if (i) s += " i=" + std::to_string(*i);
    if (j) s += " j=" + std::to_string(*j);
    if (n) s += " n=" + std::to_string(*n);
    s += "] skipped: " + reason;
    return s;
}

FamilyTally& VerifyReport::family(std::string_view name) {
    for (auto& [key, tally] : families)
        if (key == name)
            return tally;
    families.emplace_back(std::string(name), FamilyTally{});
    return families.back().second;
}

long VerifyReport::total_checked() const {
    long total = 0;
    for (const auto& [key, tally] : families)
        total += tally.checked;
    return total;
}

long VerifyReport::total_passed() const {
    long total = 0;
    for (const auto& [key, tally] : families)
        total += tally.passed;
    return total;
}

long VerifyReport::total_skipped() const {
    long total = 0;
    for (const auto& [key, tally] : families)
        total += tally.skipped;
    return total;
}

void VerifyReport::merge(VerifyReport other) {
    for (auto& [name, tally] : other.families) {
        FamilyTally& mine = family(name);
        mine.checked += tally.checked;
        mine.passed += tally.passed;
        mine.skipped += tally.skipped;
    }
    failures.insert(failures.end(), std::make_move_iterator(other.failures.begin()),
                    std::make_move_iterator(other.failures.end()));
    skipped.insert(skipped.end(), std::make_move_iterator(other.skipped.begin()),
                   std::make_move_iterator(other.skipped.end()));
}

namespace {

// Expected contact of member n with the two touched base circles, in
// tangent1/tangent2 order. Only the enclosing member of the outer chain
// touches its bases from inside.
std::pair<Tangency, Tangency> expected_base_contact(ChainVariant v, int n) {
    switch (v) {
    case ChainVariant::Alpha:
        return {Tangency::ExternallyTangent, Tangency::InternallyTangent};
    case ChainVariant::Beta:
        return {Tangency::InternallyTangent, Tangency::ExternallyTangent};
    case ChainVariant::Gamma:
        if (n == 0)
            return {Tangency::InternallyTangent, Tangency::InternallyTangent};
        return {Tangency::ExternallyTangent, Tangency::ExternallyTangent};
    }
    throw InternalError("unknown chain variant");
}

// Contact of two circles as an exact equation: squared center distance
// against the squared radius sum (external) or difference (internal).
CheckResult contact_check(const ChainSpec& spec, std::string_view id,
                          const Circle& c1, const Circle& c2, Tangency expected,
                          std::optional<int> i, std::optional<int> n) {
    Rational r1 = c1.geometric_radius();
    Rational r2 = c2.geometric_radius();
    Rational rhs = expected == Tangency::ExternallyTangent ? sq(r1 + r2) : sq(r1 - r2);
    return make_check(spec, id, i, std::nullopt, n, dist2(c1.center, c2.center), std::move(rhs));
}

} // namespace

VerifyReport verify_chain(const ChainSpec& spec, int bound) {
    if (bound < 1)
        throw ParameterError("verification bound must be at least 1");

    VerifyReport rep;
    // fix the reporting order up front
    for (auto id : {identity::pappus_height, identity::tangency_base,
                    identity::tangency_consecutive, identity::anchor_gap,
                    identity::line_match, identity::line_residue,
                    identity::offset_formula, identity::offset_height,
                    identity::offset_unit_j, identity::offset_double_j,
                    identity::offset_antisymmetry, identity::ladder_equivalence})
        rep.family(id);

    auto record = [&](CheckResult res) {
        FamilyTally& tally = rep.family(res.identity);
        ++tally.checked;
        if (res.holds)
            ++tally.passed;
        else
            rep.failures.push_back(std::move(res));
    };
    auto guarded = [&](std::string_view id, std::optional<int> i, std::optional<int> j,
                       std::optional<int> n, auto&& fn) {
        try {
            fn();
        } catch (const DegenerateGeometryError& e) {
            ++rep.family(id).skipped;
            rep.skipped.push_back({std::string(id), spec.variant, spec.a, spec.b,
                                   i, j, n, e.what()});
        }
    };

    for (int n = -bound; n <= bound; ++n) {
        ChainCircle cn = chain_circle(spec, n);

        record(make_check(spec, identity::pappus_height, std::nullopt, std::nullopt, n,
                          cn.circle.center.y, Rational(2LL * n) * cn.circle.radius));

        auto [kind1, kind2] = expected_base_contact(spec.variant, n);
        record(contact_check(spec, identity::tangency_base, cn.circle, spec.tangent1,
                             kind1, std::nullopt, n));
        record(contact_check(spec, identity::tangency_base, cn.circle, spec.tangent2,
                             kind2, std::nullopt, n));

        if (n < bound) {
            ChainCircle next = chain_circle(spec, n + 1);
            bool inner = spec.variant == ChainVariant::Gamma && (n == -1 || n == 0);
            record(contact_check(spec, identity::tangency_consecutive, cn.circle, next.circle,
                                 inner ? Tangency::InternallyTangent
                                       : Tangency::ExternallyTangent,
                                 std::nullopt, n));
        }

        record(make_check(spec, identity::ladder_equivalence, std::nullopt, std::nullopt, n,
                          [&] {
                              ChainCircle lad = ladder_chain_circle(spec, n);
                              return abs(lad.circle.center.x - cn.circle.center.x) +
                                     abs(lad.circle.center.y - cn.circle.center.y) +
                                     abs(lad.circle.radius - cn.circle.radius);
                          }(),
                          Rational(0)));
    }

    for (int i = -bound; i <= bound; ++i)
        for (int n = -bound; n <= bound; ++n)
            guarded(identity::anchor_gap, i, std::nullopt, n,
                    [&] { record(anchor_gap_check(spec, i, n)); });

    for (int i = -bound; i <= bound; ++i) {
        for (int j = i + 1; j <= bound; ++j) {
            LineCoeffs closed = center_line_closed_form(spec, i, j);
            LineCoeffs direct = line_through_centers(spec, i, j);
            record(make_check(spec, identity::line_match, i, j, std::nullopt,
                              abs(Rational(Integer(closed.a - direct.a))) +
                                  abs(Rational(Integer(closed.b - direct.b))) +
                                  abs(Rational(Integer(closed.c - direct.c))),
                              Rational(0)));
            Point di = chain_circle(spec, i).circle.center;
            Point dj = chain_circle(spec, j).circle.center;
            record(make_check(spec, identity::line_residue, i, j, std::nullopt,
                              abs(line_eval(closed, di)) + abs(line_eval(closed, dj)),
                              Rational(0)));

            if (i + j != 0) {
                for (int n = -bound; n <= bound; ++n) {
                    guarded(identity::offset_formula, i, j, n,
                            [&] { record(offset_check(spec, i, j, n)); });
                    guarded(identity::offset_height, i, j, n,
                            [&] { record(intersection_height_check(spec, i, j, n)); });
                    guarded(identity::offset_antisymmetry, i, j, n, [&] {
                        for (CheckResult& res : special_offset_checks(spec, i, j, n))
                            if (res.identity == identity::offset_antisymmetry)
                                record(std::move(res));
                    });
                }
            }
        }
    }

    for (int j : {1, -1, 2, -2}) {
        if (std::abs(j) > bound)
            continue;
        for (int n = -bound; n <= bound; ++n) {
            auto id = std::abs(j) == 1 ? identity::offset_unit_j : identity::offset_double_j;
            guarded(id, 0, j, n, [&] {
                for (CheckResult& res : special_offset_checks(spec, 0, j, n))
                    if (res.identity == id)
                        record(std::move(res));
            });
        }
    }

    return rep;
}

std::vector<std::pair<Rational, Rational>> verification_grid() {
    const Rational values[] = {Rational(1), Rational(1, 2), Rational(2),
                               Rational(3, 2), Rational(5, 3), Rational(7, 2)};
    std::vector<std::pair<Rational, Rational>> grid;
    grid.reserve(36);
    for (const Rational& a : values)
        for (const Rational& b : values)
            grid.emplace_back(a, b);
    return grid;
}

VerifyReport verify_many(const std::vector<ChainSpec>& specs, int bound) {
    VerifyReport total;
    if (specs.empty())
        return total;
    size_t count = specs.size();
    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = std::min<size_t>(count, hw ? hw : 1);
    if (workers <= 1) {
        for (const ChainSpec& spec : specs)
            total.merge(verify_chain(spec, bound));
        return total;
    }
    std::vector<std::future<VerifyReport>> parts;
    parts.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        size_t lo = count * w / workers;
        size_t hi = count * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, [&specs, lo, hi, bound] {
            VerifyReport part;
            for (size_t k = lo; k < hi; ++k)
                part.merge(verify_chain(specs[k], bound));
            return part;
        }));
    }
    for (auto& part : parts)
        total.merge(part.get());
    return total;
}

} // namespace arbelos
