#pragma once

#include "lowdeg/arith.hpp"
#include "lowdeg/lattice.hpp"

namespace lowdeg {

/// Numerical Chern character (ch0, ch1, ch2) of a sheaf on a surface.
struct ChernCharacter {
  Integer ch0;
  DivisorClass ch1;
  Rational ch2;
  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

/// ch of the rank-2 kernel of O_S^2 -> i_* O_C(Gamma) for a degree-e
/// pencil Gamma on C: (2, -C, C^2/2 - e).
ChernCharacter kernel_sheaf_character(const IntersectionLattice& lattice, const DivisorClass& curve,
                                      const Integer& degree);

/// 2 ch0 ch2 - ch1^2.
Rational discriminant(const IntersectionLattice& lattice, const ChernCharacter& ch);

/// (ch1.H) / ch0. Throws InputError when ch0 = 0 or H.H <= 0.
Rational slope(const IntersectionLattice& lattice, const ChernCharacter& ch,
               const DivisorClass& polarization);

/// Positive discriminant: by Bogomolov no torsion-free sheaf with this
/// character is mu-semistable for any ample class.
bool bogomolov_unstable(const IntersectionLattice& lattice, const ChernCharacter& ch);

}  // namespace lowdeg
