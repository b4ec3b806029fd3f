#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowdeg/arith.hpp"
#include "lowdeg/cone.hpp"
#include "lowdeg/lattice.hpp"

namespace lowdeg {

enum class SurfaceKind { Plane, P1xP1, ExP1, Rank1, CompleteIntersection, Generic };

/// A surface with known numerical data: lattice, closed ample and effective
/// cones, irregularity flag and (when known) a very ample class.
///
/// Built-in coordinates:
///   Plane, Rank1, CompleteIntersection: multiples of O(1);
///   P1xP1: bidegree (d1, d2), gram [[0,1],[1,0]], K = (-2,-2);
///   ExP1: x F1 + y F2 with F1, F2 the fibers of the two projections,
///         gram [[0,1],[1,0]], K = (0,-2).
class SurfaceModel {
 public:
  static SurfaceModel plane();
  static SurfaceModel p1xp1();
  static SurfaceModel exp1();
  /// Picard rank one with O(1)^2 = degree and O(1) very ample.
  static SurfaceModel rank1(const Integer& degree);
  /// Curve of type d1 <= d2 <= ... in P^n (n = degrees.size() + 1 >= 3),
  /// sitting on the surface cut out by d2, d3, ...
  static SurfaceModel complete_intersection(std::vector<Integer> degrees);
  static SurfaceModel generic(IntersectionLattice lattice, RationalCone ample_cone,
                              RationalCone effective_cone, bool irregularity_zero,
                              std::optional<DivisorClass> very_ample);

  SurfaceKind kind() const { return kind_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  /// Closed cone; for built-in models its interior is the ample cone.
  const RationalCone& ample_cone() const { return ample_; }
  const RationalCone& effective_cone() const { return effective_; }
  bool irregularity_zero() const { return irregularity_zero_; }
  const std::optional<DivisorClass>& very_ample() const { return very_ample_; }
  /// A fixed ample class used to bound searches: (1) or (1,1) on built-ins.
  DivisorClass reference_ample() const;
  /// O(1)^2 for Rank1 and the surface of a complete intersection.
  const Integer& hyperplane_degree() const { return hyperplane_degree_; }
  const std::vector<Integer>& ci_degrees() const { return ci_degrees_; }

  /// Strict positivity on built-ins; membership in the closed cone plus
  /// positive square for generic models.
  bool is_ample(const DivisorClass& cls) const;

  /// CLI spelling: plane, p1p1, exp1, rank1:d, ci:d1,d2,..., generic.
  std::string name() const;

 private:
  SurfaceModel(SurfaceKind kind, IntersectionLattice lattice, RationalCone ample,
               RationalCone effective, bool irregularity_zero,
               std::optional<DivisorClass> very_ample);

  SurfaceKind kind_;
  IntersectionLattice lattice_;
  RationalCone ample_;
  RationalCone effective_;
  bool irregularity_zero_;
  std::optional<DivisorClass> very_ample_;
  Integer hyperplane_degree_ = 0;
  std::vector<Integer> ci_degrees_;
};

}  // namespace lowdeg
