#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowdeg/arith.hpp"
#include "lowdeg/cone.hpp"
#include "lowdeg/lattice.hpp"
#include "lowdeg/surface_model.hpp"

namespace lowdeg {

/// A curve class C with a candidate pencil degree e < C^2/4, to be tested
/// against the numerical shadow of the maximal destabilizing line bundle
/// O(-D) of the rank-2 kernel sheaf.
class DestabilizerQuery {
 public:
  /// Throws InputError unless C is ample on the model and 4e < C^2.
  /// The search cone defaults to the model's effective cone.
  DestabilizerQuery(SurfaceModel model, DivisorClass curve, Integer degree,
                    std::optional<RationalCone> search_cone = std::nullopt);

  const SurfaceModel& model() const { return model_; }
  const DivisorClass& curve() const { return curve_; }
  const Integer& degree() const { return degree_; }
  const RationalCone& search_cone() const { return search_cone_; }

 private:
  SurfaceModel model_;
  DivisorClass curve_;
  Integer degree_;
  RationalCone search_cone_;
};

struct CandidateSet {
  /// Integral D in the search cone with C.D < C^2/2 and D.(C-D) <= e.
  std::vector<DivisorClass> raw;
  /// raw minus classes that cannot move in a pencil on the model.
  std::vector<DivisorClass> pencil_filtered;
  /// D.C - e for each pencil_filtered entry, same order.
  std::vector<Integer> residual_degrees;
  /// false for models where h^0 >= 2 is not numerically decidable.
  bool pencil_filter_applied = true;
  std::optional<std::string> warning;
  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

/// Whether some effective divisor with class D can have h^0 >= 2.
/// Built-in Plane, P1xP1, ExP1 and Rank1 models only; Unsupported otherwise.
bool pencil_capable(const SurfaceModel& model, const DivisorClass& d);

/// Level-by-level scan in C.D over the search cone; complete because every
/// level of a cone on which C is positive is a bounded polytope.
CandidateSet enumerate_candidates(const DestabilizerQuery& query);

enum class Verdict {
  /// No basepoint-free pencil of degree <= e: gon(C) > e.
  GonalityExceedsDegree,
  /// Some classes survive the numerical conditions; nothing is claimed.
  CandidatesSurvive,
};

struct Survivor {
  DivisorClass cls;
  Integer residual_degree;  ///< D.C - e, the degree of D|_C - Gamma
  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct DestabilizerCertificate {
  Verdict verdict;
  Integer degree;
  CandidateSet candidates;
  /// pencil_filtered entries with D.C - e >= 0.
  std::vector<Survivor> survivors;
  /// pencil_filtered entries dropped because D|_C - Gamma would have
  /// negative degree for a pencil of degree exactly e.
  std::vector<DivisorClass> residual_pruned;
  /// No pencil of degree exactly e survives (weaker than the verdict; only
  /// meaningful when the verdict is CandidatesSurvive).
  bool exact_degree_excluded = false;
  std::string statement;
  friend bool operator==(const DestabilizerCertificate&, const DestabilizerCertificate&) = default;
};

DestabilizerCertificate contradiction_certificate(const DestabilizerQuery& query);

std::string to_string(Verdict v);

}  // namespace lowdeg
