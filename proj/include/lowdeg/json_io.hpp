#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "lowdeg/cone.hpp"
#include "lowdeg/destabilizer.hpp"
#include "lowdeg/exceptional.hpp"
#include "lowdeg/invariants.hpp"
#include "lowdeg/lattice.hpp"
#include "lowdeg/sheaf.hpp"

namespace lowdeg::json {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always strings "a" or "a/b". Readers accept both
// spellings and report the offending field path in InputError.

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& path);
Json class_to_json(const DivisorClass& d);
DivisorClass class_from_json(const Json& j, const std::string& path);

/// Parses text, turning syntax errors into InputError with the position.
Json parse(std::string_view text, const std::string& source);
/// "[5,4]" style class literal from the command line.
DivisorClass parse_class(std::string_view text);

Json lattice_to_json(const IntersectionLattice& lattice);
IntersectionLattice lattice_from_json(const Json& j);

Json cone_to_json(const RationalCone& cone);
RationalCone cone_from_json(const IntersectionLattice& lattice, const Json& j,
                            std::size_t max_rank = kDefaultMaxRank);

Json exc_report_to_json(const ExcReport& report);
ExcReport exc_report_from_json(const Json& j);

Json chern_to_json(const ChernCharacter& ch);
ChernCharacter chern_from_json(const Json& j);

Json candidates_to_json(const CandidateSet& set);
CandidateSet candidates_from_json(const Json& j);
Json destab_certificate_to_json(const DestabilizerCertificate& cert);
DestabilizerCertificate destab_certificate_from_json(const Json& j);

Json certificate_to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string render(const Json& j);

}  // namespace lowdeg::json
