#include "arbelos/export.hpp"

namespace arbelos {

namespace {

Json point_json(const Point& p) {
    return Json{{"x", p.x.str()}, {"y", p.y.str()}};
}

Json circle_json(const Circle& c) {
    return Json{{"x", c.center.x.str()}, {"y", c.center.y.str()}, {"r", c.radius.str()}};
}

Json check_json(const CheckResult& res) {
    Json doc{{"identity", res.identity},
             {"variant", std::string(to_string(res.variant))},
             {"a", res.a.str()},
             {"b", res.b.str()}};
    if (res.i) doc["i"] = *res.i;
    if (res.j) doc["j"] = *res.j;
    if (res.n) doc["n"] = *res.n;
    doc["lhs"] = res.lhs.str();
    doc["rhs"] = res.rhs.str();
    doc["holds"] = res.holds;
    return doc;
}

} // namespace

Json member_record(const ChainSpec& spec, const ChainCircle& member) {
    Json tangencies = Json::array();
    const std::pair<const Circle*, std::string_view> bases[] = {
        {&spec.tangent1, spec.tangent1_name},
        {&spec.tangent2, spec.tangent2_name},
    };
    for (const auto& [base, name] : bases) {
        Tangency kind = tangency_classify(member.circle, *base);
        if (kind == Tangency::NotTangent)
            throw InternalError("chain member " + std::to_string(member.n) +
                                " is not tangent to base circle " + std::string(name));
        tangencies.push_back(Json{{"other", std::string(name)}, {"kind", to_string(kind)}});
    }
    return Json{{"n", member.n},
                {"x", member.circle.center.x.str()},
                {"y", member.circle.center.y.str()},
                {"r", member.circle.radius.str()},
                {"tangencies", std::move(tangencies)}};
}

Json members_document(const ChainSpec& spec, int n_min, int n_max) {
    if (n_min > n_max)
        throw ParameterError("empty member index range");
    Json doc = Json::array();
    for (int n = n_min; n <= n_max; ++n)
        doc.push_back(member_record(spec, chain_circle(spec, n)));
    return doc;
}

std::string members_csv(const ChainSpec& spec, int n_min, int n_max) {
    if (n_min > n_max)
        throw ParameterError("empty member index range");
    std::string csv = "n,x,y,r\n";
    for (int n = n_min; n <= n_max; ++n) {
        ChainCircle member = chain_circle(spec, n);
        csv += std::to_string(n);
        csv += ',' + member.circle.center.x.str();
        csv += ',' + member.circle.center.y.str();
        csv += ',' + member.circle.radius.str();
        csv += '\n';
    }
    return csv;
}

Json ladder_document(const ChainSpec& spec, int n, const Rational& power) {
    LadderTrace trace = ladder_trace(spec, n, power);
    auto line_json = [](std::string_view of, const LineCoeffs& line, const Rational& x) {
        return Json{{"of", std::string(of)},
                    {"a", line.a.str()},
                    {"b", line.b.str()},
                    {"c", line.c.str()},
                    {"x", x.str()}};
    };
    return Json{{"variant", std::string(to_string(spec.variant))},
                {"a", spec.a.str()},
                {"b", spec.b.str()},
                {"n", n},
                {"inversion", Json{{"center", point_json(trace.map.center)},
                                   {"power", trace.map.power.str()}}},
                {"image_lines", Json::array({line_json(spec.tangent1_name, trace.image1, trace.x1),
                                             line_json(spec.tangent2_name, trace.image2, trace.x2)})},
                {"ladder_circle", circle_json(trace.rung)},
                {"result", circle_json(trace.result.circle)}};
}

Json report_document(const VerifyReport& report) {
    Json families = Json::object();
    for (const auto& [name, tally] : report.families)
        families[name] = Json{{"checked", tally.checked},
                              {"passed", tally.passed},
                              {"skipped", tally.skipped}};
    Json failures = Json::array();
    for (const CheckResult& res : report.failures)
        failures.push_back(check_json(res));
    Json skipped = Json::array();
    for (const SkippedCheck& skip : report.skipped) {
        Json doc{{"identity", skip.identity},
                 {"variant", std::string(to_string(skip.variant))},
                 {"a", skip.a.str()},
                 {"b", skip.b.str()}};
        if (skip.i) doc["i"] = *skip.i;
        if (skip.j) doc["j"] = *skip.j;
        if (skip.n) doc["n"] = *skip.n;
        doc["reason"] = skip.reason;
        skipped.push_back(std::move(doc));
    }
    return Json{{"families", std::move(families)},
                {"total_checked", report.total_checked()},
                {"total_passed", report.total_passed()},
                {"total_skipped", report.total_skipped()},
                {"all_passed", report.all_passed()},
                {"failures", std::move(failures)},
                {"skipped", std::move(skipped)}};
}

} // namespace arbelos
