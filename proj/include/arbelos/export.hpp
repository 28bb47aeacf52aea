#pragma once

#include <json.hpp>

#include <string>

#include "arbelos/inversion.hpp"
#include "arbelos/verify.hpp"

namespace arbelos {

/// Insertion-ordered JSON, so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// One member as {"n", "x", "y", "r", "tangencies"}. Coordinates and radius
/// are canonical "p/q" strings, so nothing is rounded in transit; r keeps
/// its sign. tangencies lists the contact kind with each touched base circle.
Json member_record(const ChainSpec& spec, const ChainCircle& member);

/// Array of member_record over the inclusive index range.
Json members_document(const ChainSpec& spec, int n_min, int n_max);

/// The same range as CSV with header "n,x,y,r".
std::string members_csv(const ChainSpec& spec, int n_min, int n_max);

/// Full trace of one ladder construction: the inversion used, both vertical
/// image lines, the ladder circle, and the member it maps back to.
Json ladder_document(const ChainSpec& spec, int n, const Rational& power);

/// Sweep outcome: per-identity tallies plus full failure and skip lists.
Json report_document(const VerifyReport& report);

} // namespace arbelos
