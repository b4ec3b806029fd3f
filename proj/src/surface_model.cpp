#include "lowdeg/surface_model.hpp"

#include <algorithm>

#include "lowdeg/errors.hpp"

namespace lowdeg {

namespace {

RationalCone quadrant(const IntersectionLattice& lattice) {
  return RationalCone::from_rays_and_facets(lattice, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
}

RationalCone half_line(const IntersectionLattice& lattice) {
  return RationalCone::from_rays_and_facets(lattice, {{1}}, {{1}});
}

IntersectionLattice hyperbolic_plane(long k1, long k2) {
  return IntersectionLattice::from_rows({{0, 1}, {1, 0}}, DivisorClass{k1, k2});
}

}  // namespace

SurfaceModel::SurfaceModel(SurfaceKind kind, IntersectionLattice lattice, RationalCone ample,
                           RationalCone effective, bool irregularity_zero,
                           std::optional<DivisorClass> very_ample)
    : kind_(kind),
      lattice_(std::move(lattice)),
      ample_(std::move(ample)),
      effective_(std::move(effective)),
      irregularity_zero_(irregularity_zero),
      very_ample_(std::move(very_ample)) {}

SurfaceModel SurfaceModel::plane() {
  auto lattice = IntersectionLattice::from_rows({{1}}, DivisorClass{-3});
  SurfaceModel m(SurfaceKind::Plane, lattice, half_line(lattice), half_line(lattice), true,
                 DivisorClass{1});
  m.hyperplane_degree_ = 1;
  return m;
}

SurfaceModel SurfaceModel::p1xp1() {
  auto lattice = hyperbolic_plane(-2, -2);
  return SurfaceModel(SurfaceKind::P1xP1, lattice, quadrant(lattice), quadrant(lattice), true,
                      DivisorClass{1, 1});
}

SurfaceModel SurfaceModel::exp1() {
  // h^1(O_S) = 1 for S = E x P^1.
  auto lattice = hyperbolic_plane(0, -2);
  return SurfaceModel(SurfaceKind::ExP1, lattice, quadrant(lattice), quadrant(lattice), false,
                      std::nullopt);
}

SurfaceModel SurfaceModel::rank1(const Integer& degree) {
  if (sgn(degree) <= 0) throw InputError("rank-1 model needs O(1)^2 > 0");
  auto lattice = IntersectionLattice(std::vector<std::vector<Integer>>(1, std::vector<Integer>{degree}));
  SurfaceModel m(SurfaceKind::Rank1, lattice, half_line(lattice), half_line(lattice), true,
                 DivisorClass{1});
  m.hyperplane_degree_ = degree;
  return m;
}

SurfaceModel SurfaceModel::complete_intersection(std::vector<Integer> degrees) {
  if (degrees.size() < 2) {
    throw InputError("complete intersection curve needs at least two degrees (n >= 3)");
  }
  for (const auto& d : degrees) {
    if (d < 1) throw InputError("complete intersection degrees must be positive");
  }
  if (!std::is_sorted(degrees.begin(), degrees.end())) {
    throw InputError("complete intersection degrees must be non-decreasing");
  }
  Integer surface_degree = 1;
  Integer degree_sum = 0;
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    surface_degree *= degrees[i];
    degree_sum += degrees[i];
  }
  // Adjunction on S = V(d2, ..., d_{n-1}) in P^n: K_S = (sum d_i - n - 1) H.
  const long n = static_cast<long>(degrees.size()) + 1;
  Integer k = degree_sum - n - 1;
  auto lattice =
      IntersectionLattice(std::vector<std::vector<Integer>>(1, std::vector<Integer>{surface_degree}),
                          DivisorClass(std::vector<Integer>{k}));
  SurfaceModel m(SurfaceKind::CompleteIntersection, lattice, half_line(lattice),
                 half_line(lattice), true, DivisorClass{1});
  m.hyperplane_degree_ = surface_degree;
  m.ci_degrees_ = std::move(degrees);
  return m;
}

SurfaceModel SurfaceModel::generic(IntersectionLattice lattice, RationalCone ample_cone,
                                   RationalCone effective_cone, bool irregularity_zero,
                                   std::optional<DivisorClass> very_ample) {
  if (!(ample_cone.lattice() == lattice) || !(effective_cone.lattice() == lattice)) {
    throw InputError("generic model cones must live on the model lattice");
  }
  if (very_ample) {
    lattice.check(*very_ample);
    if (sgn(square(lattice, *very_ample)) <= 0) {
      throw InputError("very ample class must have positive square");
    }
  }
  return SurfaceModel(SurfaceKind::Generic, std::move(lattice), std::move(ample_cone),
                      std::move(effective_cone), irregularity_zero, std::move(very_ample));
}

DivisorClass SurfaceModel::reference_ample() const {
  switch (kind_) {
    case SurfaceKind::P1xP1:
    case SurfaceKind::ExP1:
      return DivisorClass{1, 1};
    case SurfaceKind::Generic:
      if (very_ample_) return *very_ample_;
      throw Unsupported("generic model has no reference ample class");
    default:
      return DivisorClass{1};
  }
}

bool SurfaceModel::is_ample(const DivisorClass& cls) const {
  lattice_.check(cls);
  if (kind_ == SurfaceKind::Generic) {
    return membership(ample_, cls) && sgn(square(lattice_, cls)) > 0;
  }
  return std::all_of(cls.coords().begin(), cls.coords().end(),
                     [](const Integer& c) { return sgn(c) > 0; });
}

std::string SurfaceModel::name() const {
  switch (kind_) {
    case SurfaceKind::Plane:
      return "plane";
    case SurfaceKind::P1xP1:
      return "p1p1";
    case SurfaceKind::ExP1:
      return "exp1";
    case SurfaceKind::Rank1:
      return "rank1:" + hyperplane_degree_.get_str();
    case SurfaceKind::CompleteIntersection: {
      std::string s = "ci:";
      for (std::size_t i = 0; i < ci_degrees_.size(); ++i) {
        if (i) s += ',';
        s += ci_degrees_[i].get_str();
      }
      return s;
    }
    case SurfaceKind::Generic:
      return "generic";
  }
  return "unknown";
}

}  // namespace lowdeg
