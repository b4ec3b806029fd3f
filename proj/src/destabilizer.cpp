#include "lowdeg/destabilizer.hpp"

#include <algorithm>

#include "lowdeg/errors.hpp"

namespace lowdeg {

DestabilizerQuery::DestabilizerQuery(SurfaceModel model, DivisorClass curve, Integer degree,
                                     std::optional<RationalCone> search_cone)
    : model_(std::move(model)),
      curve_(std::move(curve)),
      degree_(std::move(degree)),
      search_cone_(search_cone ? std::move(*search_cone) : model_.effective_cone()) {
  model_.lattice().check(curve_);
  if (!(search_cone_.lattice() == model_.lattice())) {
    throw InputError("search cone must live on the model lattice");
  }
  if (!model_.is_ample(curve_)) {
    throw InputError("curve class " + curve_.str() + " is not ample on " + model_.name());
  }
  if (sgn(degree_) < 0) throw InputError("pencil degree must be non-negative");
  if (!(4 * degree_ < square(model_.lattice(), curve_))) {
    throw InputError("destabilizing argument inapplicable: deg Gamma < C^2/4 required (e = " +
                     degree_.get_str() + ", C^2 = " +
                     square(model_.lattice(), curve_).get_str() + ")");
  }
}

bool pencil_capable(const SurfaceModel& model, const DivisorClass& d) {
  model.lattice().check(d);
  switch (model.kind()) {
    case SurfaceKind::P1xP1:
      // h^0(O(x,y)) = (x+1)(y+1).
      return sgn(d[0]) >= 0 && sgn(d[1]) >= 0 && (d[0] + 1) * (d[1] + 1) >= 2;
    case SurfaceKind::ExP1:
      // h^0(L boxtimes O(y)) = h^0(L)(y+1) with deg L = x; h^0(L) <= 1 for x <= 1.
      return sgn(d[0]) >= 0 && sgn(d[1]) >= 0 && (d[1] >= 1 || d[0] >= 2);
    case SurfaceKind::Plane:
    case SurfaceKind::Rank1:
      return d[0] >= 1;
    default:
      throw Unsupported("pencil capability is not numerically decidable on model " +
                        model.name());
  }
}

CandidateSet enumerate_candidates(const DestabilizerQuery& query) {
  const auto& lattice = query.model().lattice();
  const auto& c = query.curve();
  const Integer c2 = square(lattice, c);

  CandidateSet out;
  for (Integer level = 0; 2 * level < c2; ++level) {
    for (auto& d : lattice_points_at_level(query.search_cone(), c, level)) {
      if (level - pair(lattice, d, d) <= query.degree()) out.raw.push_back(std::move(d));
    }
  }
  std::sort(out.raw.begin(), out.raw.end());

  bool decidable = true;
  try {
    (void)pencil_capable(query.model(), DivisorClass::zero(lattice.rank()));
  } catch (const Unsupported&) {
    decidable = false;
  }
  if (decidable) {
    for (const auto& d : out.raw)
      if (pencil_capable(query.model(), d)) out.pencil_filtered.push_back(d);
  } else {
    out.pencil_filtered = out.raw;
    out.pencil_filter_applied = false;
    out.warning = "h^0(D) >= 2 is not decidable numerically on model " + query.model().name() +
                  "; candidates are unfiltered";
  }
  for (const auto& d : out.pencil_filtered)
    out.residual_degrees.push_back(pair(lattice, d, c) - query.degree());
  return out;
}

DestabilizerCertificate contradiction_certificate(const DestabilizerQuery& query) {
  DestabilizerCertificate cert{Verdict::CandidatesSurvive, query.degree(),
                               enumerate_candidates(query), {}, {}, false, {}};
  const auto& cands = cert.candidates;
  for (std::size_t i = 0; i < cands.pencil_filtered.size(); ++i) {
    if (sgn(cands.residual_degrees[i]) >= 0) {
      cert.survivors.push_back({cands.pencil_filtered[i], cands.residual_degrees[i]});
    } else {
      cert.residual_pruned.push_back(cands.pencil_filtered[i]);
    }
  }
  cert.exact_degree_excluded = cert.survivors.empty();
  const std::string e = query.degree().get_str();
  if (cands.pencil_filtered.empty()) {
    cert.verdict = Verdict::GonalityExceedsDegree;
    cert.statement = "no basepoint-free pencil of degree <= " + e + " exists => gon(C) > " + e;
  } else if (cert.survivors.empty()) {
    cert.statement = "no basepoint-free pencil of degree exactly " + e +
                     "; smaller degrees not excluded";
  } else {
    cert.statement = std::to_string(cert.survivors.size()) +
                     " candidate class(es) survive; no contradiction";
  }
  return cert;
}

std::string to_string(Verdict v) {
  return v == Verdict::GonalityExceedsDegree ? "gon_exceeds_degree" : "candidates_survive";
}

}  // namespace lowdeg
