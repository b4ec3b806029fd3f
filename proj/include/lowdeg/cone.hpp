#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lowdeg/arith.hpp"
#include "lowdeg/lattice.hpp"

namespace lowdeg {

/// Declared bound on the ambient rank for facet/ray synthesis.
inline constexpr std::size_t kDefaultMaxRank = 8;

/// Pointed rational polyhedral cone in the real span of a lattice, given by
/// generating rays and/or inequalities f.x >= 0 (standard dot product on
/// coordinates). Rays are stored primitive, deduplicated and sorted.
class RationalCone {
 public:
  /// Throws InputError on zero rays, wrong lengths, or a non-pointed cone.
  static RationalCone from_rays(IntersectionLattice lattice, std::vector<DivisorClass> rays);
  /// Synthesizes the extreme rays. Throws Unsupported above `max_rank`,
  /// InputError if the inequalities cut out a non-pointed cone.
  static RationalCone from_facets(IntersectionLattice lattice, std::vector<DivisorClass> facets,
                                  std::size_t max_rank = kDefaultMaxRank);
  /// Both representations; they must describe the same cone.
  static RationalCone from_rays_and_facets(IntersectionLattice lattice,
                                           std::vector<DivisorClass> rays,
                                           std::vector<DivisorClass> facets,
                                           std::size_t max_rank = kDefaultMaxRank);

  const IntersectionLattice& lattice() const { return lattice_; }
  const std::vector<DivisorClass>& rays() const { return rays_; }
  const std::optional<std::vector<DivisorClass>>& facets() const { return facets_; }

 private:
  RationalCone(IntersectionLattice lattice, std::vector<DivisorClass> rays,
               std::optional<std::vector<DivisorClass>> facets)
      : lattice_(std::move(lattice)), rays_(std::move(rays)), facets_(std::move(facets)) {}

  IntersectionLattice lattice_;
  std::vector<DivisorClass> rays_;
  std::optional<std::vector<DivisorClass>> facets_;
};

/// Feasibility of x = sum c_i r_i with c_i >= 0, decided exactly by
/// Caratheodory: some linearly independent subset of rays must contain x in
/// its simplicial cone.
bool member_by_rays(const std::vector<DivisorClass>& rays, const DivisorClass& x);
bool member_by_facets(const std::vector<DivisorClass>& facets, const DivisorClass& x);
/// Uses the facet description when present, the rays otherwise.
bool membership(const RationalCone& cone, const DivisorClass& x);

/// Inequality description of cone(rays): primitive facet normals plus a pair
/// +-w for each equation when the rays are not full dimensional. Sorted.
std::vector<DivisorClass> facet_normals(const std::vector<DivisorClass>& rays, std::size_t rank);
/// Extreme rays of {x : f.x >= 0}. Throws InputError when that cone is not pointed.
std::vector<DivisorClass> extreme_rays(const std::vector<DivisorClass>& facets, std::size_t rank);

/// Copy of `cone` with facets recomputed from the rays.
RationalCone facets_from_rays(const RationalCone& cone, std::size_t max_rank = kDefaultMaxRank);

struct SliceMinimum {
  Rational value;      ///< min of H.H over {H in N : H.P = 1}
  DivisorClass ray;    ///< a ray attaining it
  /// false when value <= 0: the cone reaches the boundary of the positive cone.
  bool positive() const { return sgn(value) > 0; }
};

/// Minimum of H.H on the slice H.P = 1 of the cone. The form is concave on
/// the slice (negative definite on P-perp), so the minimum sits at a
/// normalized ray. Requires signature (1, rank-1), P.P > 0 and v.P > 0 for
/// every ray; throws InputError ("slice unbounded") otherwise.
SliceMinimum slice_min_square(const RationalCone& cone, const DivisorClass& level_form);

struct SlicePolytope {
  DivisorClass level_form;
  Integer level;
  std::vector<std::vector<Rational>> vertices;  ///< ray_i * level / (ray_i . P)
};

SlicePolytope slice_polytope(const RationalCone& cone, const DivisorClass& level_form,
                             const Integer& level);

/// All integral x in the cone with x.P = level, lexicographically sorted.
/// Needs v.P > 0 on every ray. Level 0 yields the apex only.
std::vector<DivisorClass> lattice_points_at_level(const RationalCone& cone,
                                                  const DivisorClass& level_form,
                                                  const Integer& level);

}  // namespace lowdeg
