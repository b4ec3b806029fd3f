#include "lowdeg/exceptional.hpp"

#include "lowdeg/errors.hpp"

namespace lowdeg {

bool is_exceptional(const IntersectionLattice& lattice, const DivisorClass& h,
                    const DivisorClass& p) {
  return 9 * pair(lattice, h, p) > square(lattice, h);
}

Integer exceptional_level_bound(const Rational& slice_min) {
  if (sgn(slice_min) <= 0) throw InputError("slice minimum must be positive");
  // m l^2 < 9 l  <=>  l < 9/m.
  return ceil(Rational(9) / slice_min) - 1;
}

namespace {

Rational checked_slice_min(const RationalCone& cone, const DivisorClass& p) {
  for (const auto& v : cone.rays()) {
    if (sgn(square(cone.lattice(), v)) <= 0) {
      throw InputError("possibly infinite exceptional set: cone not strictly inside the "
                       "positive cone (ray " + v.str() + " has non-positive square)");
    }
  }
  auto m = slice_min_square(cone, p);
  if (!m.positive()) {
    throw InputError("possibly infinite exceptional set: cone not strictly inside the "
                     "positive cone");
  }
  return m.value;
}

}  // namespace

ExcReport exc_set_to_level(const RationalCone& cone, const DivisorClass& p,
                           const Integer& level_bound) {
  ExcReport report{{}, level_bound, checked_slice_min(cone, p)};
  const auto& lattice = cone.lattice();
  for (Integer level = 1; level <= level_bound; ++level) {
    for (auto& h : lattice_points_at_level(cone, p, level)) {
      Integer sq = square(lattice, h);
      Integer nine = 9 * level;
      if (nine > sq) report.members.push_back({std::move(h), std::move(sq), std::move(nine)});
    }
  }
  return report;
}

ExcReport exc_set(const RationalCone& cone, const DivisorClass& p) {
  Rational m = checked_slice_min(cone, p);
  return exc_set_to_level(cone, p, exceptional_level_bound(m));
}

}  // namespace lowdeg
