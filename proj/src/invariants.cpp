#include "lowdeg/invariants.hpp"

#include <algorithm>

#include "lowdeg/destabilizer.hpp"
#include "lowdeg/errors.hpp"
#include "lowdeg/exceptional.hpp"

namespace lowdeg {

namespace {

Integer ceil_div(const Integer& a, const Integer& b) { return ceil(Rational(a, b)); }

std::string ge(const char* what, const Integer& v) { return std::string(what) + " >= " + v.get_str(); }
std::string le(const char* what, const Integer& v) { return std::string(what) + " <= " + v.get_str(); }
std::string eq(const char* what, const Integer& v) { return std::string(what) + " = " + v.get_str(); }

// C lies on a smooth complete intersection surface with Picard group Z.O(1)
// only for 4 <= d1 < d2.
bool ci_surface_known(const SurfaceModel& model) {
  const auto& d = model.ci_degrees();
  return d[0] >= 4 && d[0] < d[1];
}

bool surface_bounds_apply(const SurfaceModel& model) {
  if (!model.irregularity_zero()) return false;
  if (model.kind() == SurfaceKind::CompleteIntersection) return ci_surface_known(model);
  return true;
}

// Lower bound gon > e - 1 from the absence of destabilizing candidates.
void require_destabilizer_bound(const CurveSpec& spec, const Integer& gon) {
  DestabilizerQuery query(spec.model, spec.cls, gon - 1);
  auto cert = contradiction_certificate(query);
  if (cert.verdict != Verdict::GonalityExceedsDegree) {
    throw InvariantError("destabilizer search left candidates at e = " + Integer(gon - 1).get_str() +
                         " for " + spec.cls.str() + "; gonality lower bound not reproduced");
  }
}

void set_exact(AirrBounds& a, const Integer& value, Provenance why) {
  if (value < a.lo || value > a.hi) {
    throw InvariantError("exact value a.irr = " + value.get_str() + " contradicts [" +
                         a.lo.get_str() + ", " + a.hi.get_str() + "]");
  }
  a.lo = value;
  a.hi = value;
  a.provenance.push_back(std::move(why));
}

void set_equal_to_gon(AirrBounds& a, const Bounds& gon, Provenance why) {
  if (gon.hi < a.lo) {
    throw InvariantError("a.irr = gon contradicts the lower bound " + a.lo.get_str());
  }
  a.lo = std::max(a.lo, gon.lo);
  a.hi = gon.hi;
  a.equals_gon = true;
  a.provenance.push_back(std::move(why));
}

}  // namespace

CurveSpec CurveSpec::complete_intersection(std::vector<Integer> degrees) {
  auto model = SurfaceModel::complete_intersection(std::move(degrees));
  DivisorClass cls(std::vector<Integer>{model.ci_degrees().front()});
  return CurveSpec{std::move(model), std::move(cls), std::nullopt, std::nullopt};
}

void validate(const CurveSpec& spec) {
  const auto& model = spec.model;
  model.lattice().check(spec.cls);
  if (!model.is_ample(spec.cls)) {
    throw InputError("class " + spec.cls.str() + " is not ample on " + model.name());
  }
  if (model.kind() == SurfaceKind::CompleteIntersection && spec.cls[0] != model.ci_degrees()[0]) {
    throw InputError("complete intersection class must be (d1)");
  }
  if (spec.bielliptic == true && model.lattice().canonical()) {
    Integer g = genus(model.lattice(), spec.cls);
    if (g < 2) {
      throw InputError("contradictory flags: bielliptic curves have genus >= 2, " +
                       spec.cls.str() + " has genus " + g.get_str());
    }
  }
}

Bounds gon_bounds(const CurveSpec& spec) {
  validate(spec);
  const auto& model = spec.model;
  const auto& lattice = model.lattice();
  Bounds b;
  switch (model.kind()) {
    case SurfaceKind::Plane: {
      const Integer& d = spec.cls[0];
      if (d == 1) {
        b.lo = b.hi = 1;
        b.provenance.push_back({eq("gon", 1), "line"});
      } else if (spec.has_rational_point == true) {
        b.lo = b.hi = d - 1;
        b.provenance.push_back({eq("gon", d - 1), "noether"});
      } else if (spec.has_rational_point == false) {
        b.lo = b.hi = d;
        b.provenance.push_back({eq("gon", d), "noether"});
      } else {
        b.lo = d - 1;
        b.hi = d;
        b.provenance.push_back({"gon in {d-1, d}", "noether"});
        b.notes.push_back("rational point unknown: gon = d-1 with a k-point, d without");
      }
      break;
    }
    case SurfaceKind::P1xP1: {
      Integer d1 = std::min(spec.cls[0], spec.cls[1]);
      require_destabilizer_bound(spec, d1);
      b.lo = b.hi = d1;
      b.provenance.push_back({le("gon", d1), "projection"});
      b.provenance.push_back({ge("gon", d1), "thm:main_p1xp1"});
      break;
    }
    case SurfaceKind::ExP1: {
      const Integer& gamma = spec.cls[0];
      const Integer& alpha = spec.cls[1];
      if (gamma < 4 || gamma > 2 * alpha || alpha > gamma) {
        throw Unsupported("E x P^1 class " + spec.cls.str() +
                          " outside 4 <= gamma and gamma/2 <= alpha <= gamma");
      }
      require_destabilizer_bound(spec, gamma);
      b.lo = b.hi = gamma;
      b.provenance.push_back({le("gon", gamma), "projection"});
      b.provenance.push_back({ge("gon", gamma), "thm:every_value_geometric"});
      break;
    }
    case SurfaceKind::Rank1: {
      const Integer& alpha = spec.cls[0];
      const Integer& deg = model.hyperplane_degree();
      b.lo = std::max(Integer(1), Integer((alpha - 1) * deg));
      b.hi = alpha * deg;
      b.provenance.push_back({ge("gon", b.lo), "ullery"});
      b.provenance.push_back({le("gon", b.hi), "projection"});
      break;
    }
    case SurfaceKind::CompleteIntersection: {
      const auto& d = model.ci_degrees();
      const Integer rest = model.hyperplane_degree();
      b.hi = d[0] * rest;
      b.provenance.push_back({le("gon", b.hi), "projection"});
      if (d[0] >= 9 && d[0] < d[1]) {
        b.lo = (d[0] - 1) * rest;
        b.provenance.push_back({ge("gon", b.lo), "lazarsfeld"});
      } else {
        b.lo = 1;
        b.notes.push_back(d[0] < d[1] ? "d1 < 9: only the projection bound is certified"
                                      : "d1 = d2: generic interval only");
      }
      break;
    }
    case SurfaceKind::Generic: {
      if (!model.very_ample()) {
        throw Unsupported("generic model needs a very ample class for the projection bound");
      }
      b.lo = 1;
      b.hi = pair(lattice, *model.very_ample(), spec.cls);
      b.provenance.push_back({le("gon", b.hi), "projection"});
      break;
    }
  }
  return b;
}

AirrBounds airr_bounds(const CurveSpec& spec) {
  const Bounds gon = gon_bounds(spec);
  const auto& model = spec.model;
  const auto& lattice = model.lattice();
  const Integer c2 = square(lattice, spec.cls);

  AirrBounds a;
  a.hi = gon.hi;
  a.provenance.push_back({"a.irr <= gon", "upper_bound"});
  a.lo = ceil_div(gon.lo, 2);
  a.provenance.push_back({ge("a.irr", a.lo), "range"});

  if (surface_bounds_apply(model)) {
    Integer q0 = std::min(gon.lo, ceil_div(c2, 9));
    if (q0 > a.lo) a.lo = q0;
    a.provenance.push_back({ge("a.irr", q0) + " (min(gon, C^2/9))", "thm:main_q0"});
    if (model.very_ample() && !is_exceptional(lattice, spec.cls, *model.very_ample())) {
      set_equal_to_gon(a, gon, {"a.irr = gon (class outside Exc_P)", "thm:main_q0"});
      if (model.kind() == SurfaceKind::Rank1) a.provenance.push_back({"a.irr = gon", "cor:main_pic1"});
      if (model.kind() == SurfaceKind::CompleteIntersection)
        a.provenance.push_back({"a.irr = gon", "cor:main_ci"});
    }
  }

  switch (model.kind()) {
    case SurfaceKind::Plane:
      if (spec.cls[0] >= 8) set_equal_to_gon(a, gon, {"a.irr = gon", "debarre-klassen"});
      break;
    case SurfaceKind::P1xP1: {
      Integer d1 = std::min(spec.cls[0], spec.cls[1]);
      Integer d2 = std::max(spec.cls[0], spec.cls[1]);
      if (d1 == 2 && d2 == 2) {
        set_exact(a, 1, {eq("a.irr", 1), "thm:main_p1xp1"});
        a.notes.push_back("(2,2): C is genus 1; value is over the algebraic closure");
      } else if (d1 == 3 && d2 == 3) {
        if (spec.bielliptic == true) {
          set_exact(a, 2, {eq("a.irr", 2) + " (bielliptic)", "thm:main_p1xp1"});
        } else if (spec.bielliptic == false) {
          set_exact(a, 3, {eq("a.irr", 3) + " (not bielliptic)", "harris-silverman"});
        } else {
          a.lo = std::max(a.lo, Integer(2));
          a.notes.push_back("(3,3): bielliptic flag needed; a.irr = 2 if bielliptic, else 3");
        }
        a.notes.push_back("(3,3): value is over the algebraic closure");
      } else {
        set_exact(a, d1, {eq("a.irr", d1), "thm:main_p1xp1"});
        a.equals_gon = true;
      }
      break;
    }
    case SurfaceKind::ExP1: {
      const Integer& alpha = spec.cls[1];
      set_exact(a, alpha, {eq("a.irr", alpha), "thm:every_value"});
      a.notes.push_back("assumes E has positive rank over k");
      if (alpha == 2 && spec.bielliptic == false) {
        throw InputError("contradictory flags: class " + spec.cls.str() +
                         " is a double cover of E, hence bielliptic");
      }
      break;
    }
    default:
      break;
  }

  if (spec.bielliptic == true && a.lo > 2 &&
      !(model.kind() == SurfaceKind::Plane && spec.has_rational_point == false)) {
    throw InputError("contradictory flags: bielliptic forces a.irr <= 2 over a finite "
                     "extension, but a.irr >= " + a.lo.get_str() + " for " + spec.cls.str());
  }
  return a;
}

std::optional<Integer> finiteness_threshold(const CurveSpec& spec) {
  validate(spec);
  const auto& model = spec.model;
  if (model.kind() == SurfaceKind::Rank1 && spec.cls[0] >= 9) {
    return (spec.cls[0] - 1) * model.hyperplane_degree();
  }
  if (model.kind() == SurfaceKind::CompleteIntersection) {
    const auto& d = model.ci_degrees();
    if (d[0] >= 9 && d[0] < d[1]) return (d[0] - 1) * model.hyperplane_degree();
  }
  return std::nullopt;
}

BoundCertificate certify(const CurveSpec& spec) {
  Bounds gon = gon_bounds(spec);
  AirrBounds airr = airr_bounds(spec);

  BoundCertificate cert;
  cert.gon_lo = gon.lo;
  cert.gon_hi = gon.hi;
  cert.airr_lo = airr.lo;
  cert.airr_hi = airr.hi;
  cert.airr_equals_gon = airr.equals_gon;
  cert.provenance = gon.provenance;
  cert.provenance.insert(cert.provenance.end(), airr.provenance.begin(), airr.provenance.end());
  cert.notes = gon.notes;
  cert.notes.insert(cert.notes.end(), airr.notes.begin(), airr.notes.end());
  cert.finiteness_threshold = finiteness_threshold(spec);

  if (!(cert.gon_lo <= cert.gon_hi) || !(cert.airr_lo <= cert.airr_hi) ||
      !(cert.airr_hi <= cert.gon_hi) || !(cert.airr_lo >= ceil_div(cert.gon_lo, 2))) {
    throw InvariantError("certificate intervals violate gon/2 <= a.irr <= gon for " +
                         spec.cls.str());
  }
  return cert;
}

}  // namespace lowdeg
