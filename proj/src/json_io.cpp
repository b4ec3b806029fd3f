#include "lowdeg/json_io.hpp"

#include <climits>

#include "lowdeg/errors.hpp"

namespace lowdeg::json {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + "." + key + ": missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  return j;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (!j.is_string()) throw InputError(path + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<DivisorClass> classes_from_json(const Json& j, const std::string& path) {
  std::vector<DivisorClass> out;
  std::size_t i = 0;
  for (const auto& item : array(j, path)) {
    out.push_back(class_from_json(item, path + "[" + std::to_string(i++) + "]"));
  }
  return out;
}

Json classes_to_json(const std::vector<DivisorClass>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(class_to_json(c));
  return out;
}

Json optional_integer(const std::optional<Integer>& z) {
  return z ? integer_to_json(*z) : Json(nullptr);
}

Verdict verdict_from_string(const std::string& s, const std::string& path) {
  if (s == to_string(Verdict::GonalityExceedsDegree)) return Verdict::GonalityExceedsDegree;
  if (s == to_string(Verdict::CandidatesSurvive)) return Verdict::CandidatesSurvive;
  throw InputError(path + ": unknown verdict '" + s + "'");
}

std::pair<Integer, Integer> interval_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw InputError(path + ": expected [lo, hi]");
  return {integer_from_json(j[0], path + "[0]"), integer_from_json(j[1], path + "[1]")};
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p() && sizeof(long) >= 8) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an integer");
}

Json class_to_json(const DivisorClass& d) {
  Json out = Json::array();
  for (const auto& c : d.coords()) out.push_back(integer_to_json(c));
  return out;
}

DivisorClass class_from_json(const Json& j, const std::string& path) {
  std::vector<Integer> coords;
  std::size_t i = 0;
  for (const auto& item : array(j, path)) {
    coords.push_back(integer_from_json(item, path + "[" + std::to_string(i++) + "]"));
  }
  return DivisorClass(std::move(coords));
}

Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

DivisorClass parse_class(std::string_view text) {
  return class_from_json(parse(text, "class literal"), "class");
}

Json lattice_to_json(const IntersectionLattice& lattice) {
  Json gram = Json::array();
  for (const auto& row : lattice.gram_rows()) gram.push_back(class_to_json(DivisorClass(row)));
  Json out;
  out["rank"] = lattice.rank();
  out["gram"] = std::move(gram);
  out["canonical"] = lattice.canonical() ? class_to_json(*lattice.canonical()) : Json(nullptr);
  return out;
}

IntersectionLattice lattice_from_json(const Json& j) {
  const std::string path = "lattice";
  Integer rank = integer_from_json(field(j, "rank", path), path + ".rank");
  std::vector<std::vector<Integer>> gram;
  std::size_t i = 0;
  for (const auto& row : array(field(j, "gram", path), path + ".gram")) {
    gram.push_back(class_from_json(row, path + ".gram[" + std::to_string(i++) + "]").coords());
  }
  if (rank != Integer(static_cast<unsigned long>(gram.size()))) {
    throw InputError(path + ".rank: " + rank.get_str() + " does not match " +
                     std::to_string(gram.size()) + " gram rows");
  }
  std::optional<DivisorClass> canonical;
  auto it = j.find("canonical");
  if (it != j.end() && !it->is_null()) canonical = class_from_json(*it, path + ".canonical");
  return IntersectionLattice(std::move(gram), std::move(canonical));
}

Json cone_to_json(const RationalCone& cone) {
  Json out;
  out["rays"] = classes_to_json(cone.rays());
  out["facets"] = cone.facets() ? classes_to_json(*cone.facets()) : Json(nullptr);
  return out;
}

RationalCone cone_from_json(const IntersectionLattice& lattice, const Json& j,
                            std::size_t max_rank) {
  const std::string path = "cone";
  if (!j.is_object()) throw InputError(path + ": expected an object");
  std::optional<std::vector<DivisorClass>> rays, facets;
  if (auto it = j.find("rays"); it != j.end() && !it->is_null())
    rays = classes_from_json(*it, path + ".rays");
  if (auto it = j.find("facets"); it != j.end() && !it->is_null())
    facets = classes_from_json(*it, path + ".facets");
  if (rays && facets) {
    return RationalCone::from_rays_and_facets(lattice, std::move(*rays), std::move(*facets),
                                              max_rank);
  }
  if (rays) return RationalCone::from_rays(lattice, std::move(*rays));
  if (facets) return RationalCone::from_facets(lattice, std::move(*facets), max_rank);
  throw InputError(path + ": needs rays or facets");
}

Json exc_report_to_json(const ExcReport& report) {
  Json members = Json::array();
  for (const auto& m : report.members) {
    Json item;
    item["class"] = class_to_json(m.cls);
    item["square"] = integer_to_json(m.square);
    item["nine_p_degree"] = integer_to_json(m.nine_p_degree);
    members.push_back(std::move(item));
  }
  Json out;
  out["members"] = std::move(members);
  out["level_bound"] = integer_to_json(report.level_bound);
  out["slice_min"] = to_string(report.slice_min);
  return out;
}

ExcReport exc_report_from_json(const Json& j) {
  const std::string path = "exc";
  ExcReport r;
  std::size_t i = 0;
  for (const auto& item : array(field(j, "members", path), path + ".members")) {
    std::string p = path + ".members[" + std::to_string(i++) + "]";
    r.members.push_back({class_from_json(field(item, "class", p), p + ".class"),
                         integer_from_json(field(item, "square", p), p + ".square"),
                         integer_from_json(field(item, "nine_p_degree", p), p + ".nine_p_degree")});
  }
  r.level_bound = integer_from_json(field(j, "level_bound", path), path + ".level_bound");
  r.slice_min = rational_from_json(field(j, "slice_min", path), path + ".slice_min");
  return r;
}

Json chern_to_json(const ChernCharacter& ch) {
  Json out;
  out["ch0"] = integer_to_json(ch.ch0);
  out["ch1"] = class_to_json(ch.ch1);
  out["ch2"] = to_string(ch.ch2);
  return out;
}

ChernCharacter chern_from_json(const Json& j) {
  const std::string path = "ch";
  return {integer_from_json(field(j, "ch0", path), path + ".ch0"),
          class_from_json(field(j, "ch1", path), path + ".ch1"),
          rational_from_json(field(j, "ch2", path), path + ".ch2")};
}

Json candidates_to_json(const CandidateSet& set) {
  Json residual = Json::array();
  for (const auto& r : set.residual_degrees) residual.push_back(integer_to_json(r));
  Json out;
  out["raw"] = classes_to_json(set.raw);
  out["pencil_filtered"] = classes_to_json(set.pencil_filtered);
  out["residual_degrees"] = std::move(residual);
  out["pencil_filter_applied"] = set.pencil_filter_applied;
  out["warning"] = set.warning ? Json(*set.warning) : Json(nullptr);
  return out;
}

CandidateSet candidates_from_json(const Json& j) {
  const std::string path = "candidates";
  CandidateSet s;
  s.raw = classes_from_json(field(j, "raw", path), path + ".raw");
  s.pencil_filtered = classes_from_json(field(j, "pencil_filtered", path), path + ".pencil_filtered");
  std::size_t i = 0;
  for (const auto& r : array(field(j, "residual_degrees", path), path + ".residual_degrees")) {
    s.residual_degrees.push_back(
        integer_from_json(r, path + ".residual_degrees[" + std::to_string(i++) + "]"));
  }
  const auto& applied = field(j, "pencil_filter_applied", path);
  if (!applied.is_boolean()) throw InputError(path + ".pencil_filter_applied: expected boolean");
  s.pencil_filter_applied = applied.get<bool>();
  if (auto it = j.find("warning"); it != j.end() && !it->is_null()) {
    s.warning = it->get<std::string>();
  }
  return s;
}

Json destab_certificate_to_json(const DestabilizerCertificate& cert) {
  Json survivors = Json::array();
  for (const auto& s : cert.survivors) {
    Json item;
    item["class"] = class_to_json(s.cls);
    item["residual_degree"] = integer_to_json(s.residual_degree);
    survivors.push_back(std::move(item));
  }
  Json out = candidates_to_json(cert.candidates);
  out["degree"] = integer_to_json(cert.degree);
  out["verdict"] = to_string(cert.verdict);
  out["statement"] = cert.statement;
  out["survivors"] = std::move(survivors);
  out["residual_pruned"] = classes_to_json(cert.residual_pruned);
  out["exact_degree_excluded"] = cert.exact_degree_excluded;
  return out;
}

DestabilizerCertificate destab_certificate_from_json(const Json& j) {
  const std::string path = "destab";
  DestabilizerCertificate c;
  c.candidates = candidates_from_json(j);
  c.degree = integer_from_json(field(j, "degree", path), path + ".degree");
  c.verdict = verdict_from_string(field(j, "verdict", path).get<std::string>(), path + ".verdict");
  c.statement = field(j, "statement", path).get<std::string>();
  std::size_t i = 0;
  for (const auto& item : array(field(j, "survivors", path), path + ".survivors")) {
    std::string p = path + ".survivors[" + std::to_string(i++) + "]";
    c.survivors.push_back({class_from_json(field(item, "class", p), p + ".class"),
                           integer_from_json(field(item, "residual_degree", p), p + ".residual_degree")});
  }
  c.residual_pruned = classes_from_json(field(j, "residual_pruned", path), path + ".residual_pruned");
  c.exact_degree_excluded = field(j, "exact_degree_excluded", path).get<bool>();
  return c;
}

Json certificate_to_json(const BoundCertificate& cert) {
  Json provenance = Json::array();
  for (const auto& p : cert.provenance) {
    Json item;
    item["bound"] = p.bound;
    item["ref"] = p.ref;
    provenance.push_back(std::move(item));
  }
  Json out;
  out["gon"] = Json::array({integer_to_json(cert.gon_lo), integer_to_json(cert.gon_hi)});
  out["airr"] = Json::array({integer_to_json(cert.airr_lo), integer_to_json(cert.airr_hi)});
  out["exact"] = cert.exact();
  out["airr_equals_gon"] = cert.airr_equals_gon;
  out["provenance"] = std::move(provenance);
  out["notes"] = cert.notes;
  out["finiteness_threshold"] = optional_integer(cert.finiteness_threshold);
  return out;
}

BoundCertificate certificate_from_json(const Json& j) {
  const std::string path = "certificate";
  BoundCertificate c;
  std::tie(c.gon_lo, c.gon_hi) = interval_from_json(field(j, "gon", path), path + ".gon");
  std::tie(c.airr_lo, c.airr_hi) = interval_from_json(field(j, "airr", path), path + ".airr");
  if (auto it = j.find("airr_equals_gon"); it != j.end()) c.airr_equals_gon = it->get<bool>();
  std::size_t i = 0;
  for (const auto& item : array(field(j, "provenance", path), path + ".provenance")) {
    std::string p = path + ".provenance[" + std::to_string(i++) + "]";
    c.provenance.push_back({field(item, "bound", p).get<std::string>(),
                            field(item, "ref", p).get<std::string>()});
  }
  if (auto it = j.find("notes"); it != j.end()) c.notes = it->get<std::vector<std::string>>();
  if (auto it = j.find("finiteness_threshold"); it != j.end() && !it->is_null()) {
    c.finiteness_threshold = integer_from_json(*it, path + ".finiteness_threshold");
  }
  const auto& exact = field(j, "exact", path);
  if (!exact.is_boolean() || exact.get<bool>() != c.exact()) {
    throw InputError(path + ".exact: inconsistent with the gon/airr intervals");
  }
  return c;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lowdeg::json
