#pragma once

#include <vector>

#include "lowdeg/arith.hpp"
#include "lowdeg/cone.hpp"
#include "lowdeg/lattice.hpp"

namespace lowdeg {

/// An exceptional class with the two sides of its defining inequality.
struct ExcMember {
  DivisorClass cls;
  Integer square;         ///< H.H
  Integer nine_p_degree;  ///< 9 H.P, strictly larger than H.H
  friend bool operator==(const ExcMember&, const ExcMember&) = default;
};

struct ExcReport {
  std::vector<ExcMember> members;  ///< sorted by (H.P, lex)
  Integer level_bound;             ///< every member has H.P <= level_bound
  Rational slice_min;              ///< min H.H on the slice H.P = 1
  friend bool operator==(const ExcReport&, const ExcReport&) = default;
};

/// 9 H.P > H.H (strict; the boundary case is not exceptional).
bool is_exceptional(const IntersectionLattice& lattice, const DivisorClass& h,
                    const DivisorClass& p);

/// Largest level l with slice_min * l^2 < 9 l. Levels above it are empty
/// since H.H >= slice_min * (H.P)^2 there.
Integer exceptional_level_bound(const Rational& slice_min);

/// Every integral H in the cone with 9 H.P > H.H. Requires signature
/// (1, rank-1), P.P > 0 and v.P > 0, v.v > 0 on every ray.
ExcReport exc_set(const RationalCone& cone, const DivisorClass& p);

/// Same scan, but stops at the given level instead of the proven bound.
/// Used by the self-test negative control.
ExcReport exc_set_to_level(const RationalCone& cone, const DivisorClass& p,
                           const Integer& level_bound);

}  // namespace lowdeg
