#include "lowdeg/sheaf.hpp"

#include "lowdeg/errors.hpp"

namespace lowdeg {

ChernCharacter kernel_sheaf_character(const IntersectionLattice& lattice, const DivisorClass& curve,
                                      const Integer& degree) {
  if (sgn(degree) < 0) throw InputError("pencil degree must be non-negative");
  Rational ch2(square(lattice, curve), 2);
  ch2.canonicalize();
  ch2 -= degree;
  return ChernCharacter{Integer(2), -curve, ch2};
}

Rational discriminant(const IntersectionLattice& lattice, const ChernCharacter& ch) {
  return 2 * Rational(ch.ch0) * ch.ch2 - Rational(square(lattice, ch.ch1));
}

Rational slope(const IntersectionLattice& lattice, const ChernCharacter& ch,
               const DivisorClass& polarization) {
  if (ch.ch0 == 0) throw InputError("slope is undefined for a rank-0 character");
  if (sgn(square(lattice, polarization)) <= 0) {
    throw InputError("slope polarization " + polarization.str() + " must have positive square");
  }
  Rational mu(pair(lattice, ch.ch1, polarization), ch.ch0);
  mu.canonicalize();
  return mu;
}

bool bogomolov_unstable(const IntersectionLattice& lattice, const ChernCharacter& ch) {
  return sgn(discriminant(lattice, ch)) > 0;
}

}  // namespace lowdeg
