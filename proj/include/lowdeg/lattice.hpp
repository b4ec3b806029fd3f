#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lowdeg/arith.hpp"

namespace lowdeg {

/// Integer coordinates of a numerical divisor class in a fixed basis of the
/// Neron-Severi lattice.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<long> coords);

  static DivisorClass zero(std::size_t rank);

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  /// Content (gcd of coordinates); 0 for the zero class.
  Integer content() const;
  /// This class divided by its content. The zero class maps to itself.
  DivisorClass primitive() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a);
  friend DivisorClass operator*(const Integer& k, DivisorClass a);

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  /// Lexicographic on coordinates; shorter vectors first.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

  /// `(c0,c1,...)`
  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

struct SignatureReport {
  bool hyperbolic = false;  ///< signature (1, rank-1), nondegenerate
  Inertia inertia;
  std::string diagnostic;
};

/// Numerical Neron-Severi lattice: a symmetric integer Gram matrix and an
/// optional canonical class. Values are immutable once built.
class IntersectionLattice {
 public:
  /// Throws InputError if `gram` is empty, not square or not symmetric, or if
  /// the canonical class has the wrong length.
  IntersectionLattice(std::vector<std::vector<Integer>> gram,
                      std::optional<DivisorClass> canonical = std::nullopt);

  static IntersectionLattice from_rows(std::initializer_list<std::initializer_list<long>> rows,
                                       std::optional<DivisorClass> canonical = std::nullopt);

  std::size_t rank() const { return rank_; }
  const Integer& gram(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }
  std::vector<std::vector<Integer>> gram_rows() const;
  const std::optional<DivisorClass>& canonical() const { return canonical_; }

  /// Throws InputError unless `d` has this lattice's rank.
  void check(const DivisorClass& d) const;

  friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b);

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> gram_;
  std::optional<DivisorClass> canonical_;
};

/// a^T G b.
Integer pair(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b);
inline Integer square(const IntersectionLattice& lattice, const DivisorClass& a) {
  return pair(lattice, a, a);
}
/// G a, the linear form x -> a.x in coordinates.
std::vector<Integer> dual_form(const IntersectionLattice& lattice, const DivisorClass& a);

/// Sylvester inertia of the Gram form, computed by exact congruence
/// diagonalization over the rationals.
Inertia inertia(const IntersectionLattice& lattice);
SignatureReport validate_signature(const IntersectionLattice& lattice);
/// Throws InputError with the diagnostic when the signature is not (1, rank-1).
void require_hyperbolic(const IntersectionLattice& lattice);

/// Arithmetic genus from adjunction, 2g - 2 = C.(C + K).
/// Throws Unsupported without a canonical class, InputError on odd C.(C+K).
Integer genus(const IntersectionLattice& lattice, const DivisorClass& curve);

}  // namespace lowdeg
