#pragma once

// Brute-force reference computations in machine integers. They share no
// code path with the library algorithms and exist to check them: box
// enumeration instead of level slicing, Cramer's rule instead of
// Caratheodory subsets, the characteristic polynomial instead of congruence
// diagonalization.

#include <functional>
#include <vector>

#include "lowdeg/lattice.hpp"

namespace lowdeg::oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

long long pair(const Mat& gram, const Vec& a, const Vec& b);

/// Membership in a cone with one ray or with rank-many independent rays.
bool in_simplicial_cone(const std::vector<Vec>& rays, const Vec& x);

/// Integer box containing every cone point with x.P <= max_level.
std::pair<Vec, Vec> level_box(const Mat& gram, const std::vector<Vec>& rays, const Vec& p,
                              long long max_level);

/// Calls fn on every integer point of [lo, hi] in lexicographic order.
void for_each_box_point(const Vec& lo, const Vec& hi, const std::function<void(const Vec&)>& fn);

std::vector<Vec> points_at_level(const Mat& gram, const std::vector<Vec>& rays, const Vec& p,
                                 long long level);

/// Nonzero cone points with 9 H.P > H.H and H.P <= max_level, sorted by
/// (H.P, lex).
std::vector<Vec> exceptional_classes(const Mat& gram, const std::vector<Vec>& rays, const Vec& p,
                                     long long max_level);

/// Classes D in [0, box]^rank with C.D < C^2/2 and D.(C-D) <= e, lex order.
std::vector<Vec> destabilizer_candidates(const Mat& gram, const Vec& curve, long long degree,
                                         long long box);

/// (n+, n-, n0) of a symmetric matrix from the signs of its characteristic
/// polynomial (Descartes' rule is exact for real-rooted polynomials).
Inertia charpoly_inertia(const Mat& gram);

Vec to_vec(const DivisorClass& d);
DivisorClass from_vec(const Vec& v);
Mat gram_of(const IntersectionLattice& lattice);

}  // namespace lowdeg::oracle
