#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowdeg/arith.hpp"
#include "lowdeg/lattice.hpp"
#include "lowdeg/surface_model.hpp"

namespace lowdeg {

/// A smooth curve on a model surface. For complete intersections the class
/// is (d1), the curve's first degree, taken from the model.
struct CurveSpec {
  SurfaceModel model;
  DivisorClass cls;
  std::optional<bool> has_rational_point;
  std::optional<bool> bielliptic;

  /// Builds a spec for a complete intersection of the given type.
  static CurveSpec complete_intersection(std::vector<Integer> degrees);
};

/// Why a bound holds: a human-readable bound and the result it comes from.
struct Provenance {
  std::string bound;
  std::string ref;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Bounds {
  Integer lo;
  Integer hi;
  std::vector<Provenance> provenance;
  std::vector<std::string> notes;
};

struct AirrBounds : Bounds {
  /// a.irr = gon is established, whatever the width of the gon interval.
  bool equals_gon = false;
};

struct BoundCertificate {
  Integer gon_lo, gon_hi;
  Integer airr_lo, airr_hi;
  bool airr_equals_gon = false;
  std::vector<Provenance> provenance;
  std::vector<std::string> notes;
  std::optional<Integer> finiteness_threshold;

  /// Both invariants pinned to a single value.
  bool exact() const { return gon_lo == gon_hi && airr_lo == airr_hi; }
  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// Throws InputError for a class that is not ample or a malformed spec.
void validate(const CurveSpec& spec);

/// Gonality interval. Throws Unsupported when the model's theorem
/// hypotheses fail (E x P^1 outside 4 <= gamma <= 2 alpha, alpha <= gamma).
Bounds gon_bounds(const CurveSpec& spec);

/// Arithmetic degree of irrationality interval. The C^2/9 bound is only
/// used on surfaces with h^1(O_S) = 0.
AirrBounds airr_bounds(const CurveSpec& spec);

/// Degree below which C_K has finitely many points for every finite K/k,
/// where a corollary provides one (rank one with alpha >= 9, complete
/// intersections with 9 <= d1 < d2).
std::optional<Integer> finiteness_threshold(const CurveSpec& spec);

/// Everything above, with the interval invariants checked.
BoundCertificate certify(const CurveSpec& spec);

}  // namespace lowdeg
