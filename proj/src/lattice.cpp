#include "lowdeg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lowdeg/errors.hpp"

namespace lowdeg {

DivisorClass::DivisorClass(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

DivisorClass DivisorClass::zero(std::size_t rank) {
  return DivisorClass(std::vector<Integer>(rank, Integer(0)));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer DivisorClass::content() const {
  Integer g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

DivisorClass DivisorClass::primitive() const {
  Integer g = content();
  if (g == 0 || g == 1) return *this;
  DivisorClass out = *this;
  for (auto& c : out.coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.rank() != rank()) throw InputError("divisor class rank mismatch in sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.rank() != rank()) throw InputError("divisor class rank mismatch in difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

DivisorClass operator-(DivisorClass a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

DivisorClass operator*(const Integer& k, DivisorClass a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string DivisorClass::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i].get_str();
  }
  out << ')';
  return out.str();
}

IntersectionLattice::IntersectionLattice(std::vector<std::vector<Integer>> gram,
                                         std::optional<DivisorClass> canonical)
    : rank_(gram.size()), canonical_(std::move(canonical)) {
  if (rank_ == 0) throw InputError("lattice rank must be positive");
  gram_.reserve(rank_ * rank_);
  for (const auto& row : gram) {
    if (row.size() != rank_) throw InputError("gram matrix is not square");
    gram_.insert(gram_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      if (gram_[i * rank_ + j] != gram_[j * rank_ + i]) {
        throw InputError("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  if (canonical_ && canonical_->rank() != rank_) {
    throw InputError("canonical class has length " + std::to_string(canonical_->rank()) +
                     ", lattice rank is " + std::to_string(rank_));
  }
}

IntersectionLattice IntersectionLattice::from_rows(
    std::initializer_list<std::initializer_list<long>> rows, std::optional<DivisorClass> canonical) {
  std::vector<std::vector<Integer>> gram;
  for (const auto& row : rows) {
    gram.emplace_back();
    for (long v : row) gram.back().emplace_back(v);
  }
  return IntersectionLattice(std::move(gram), std::move(canonical));
}

std::vector<std::vector<Integer>> IntersectionLattice::gram_rows() const {
  std::vector<std::vector<Integer>> rows(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    rows[i].assign(gram_.begin() + static_cast<std::ptrdiff_t>(i * rank_),
                   gram_.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank_));
  }
  return rows;
}

void IntersectionLattice::check(const DivisorClass& d) const {
  if (d.rank() != rank_) {
    throw InputError("class " + d.str() + " has length " + std::to_string(d.rank()) +
                     ", lattice rank is " + std::to_string(rank_));
  }
}

bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
  return a.rank_ == b.rank_ && a.gram_ == b.gram_ && a.canonical_ == b.canonical_;
}

Integer pair(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
  lattice.check(a);
  lattice.check(b);
  Integer total = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (a[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < lattice.rank(); ++j) row += lattice.gram(i, j) * b[j];
    total += a[i] * row;
  }
  return total;
}

std::vector<Integer> dual_form(const IntersectionLattice& lattice, const DivisorClass& a) {
  lattice.check(a);
  std::vector<Integer> out(lattice.rank(), Integer(0));
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    for (std::size_t j = 0; j < lattice.rank(); ++j) out[i] += lattice.gram(i, j) * a[j];
  }
  return out;
}

Inertia inertia(const IntersectionLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = lattice.gram(i, j);

  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
  };

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (sgn(m[i][i]) != 0) pivot = i;

    if (pivot == n) {
      // Zero diagonal: x_i -> x_i + x_j turns a nonzero off-diagonal entry
      // into the diagonal entry 2 m_ij.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(m[i][j]) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        out.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) m[oi][c] += m[oj][c];
      for (std::size_t r = 0; r < n; ++r) m[r][oi] += m[r][oj];
      pivot = oi;
    }
    swap_index(k, pivot);

    const Rational p = m[k][k];
    (sgn(p) > 0 ? out.positive : out.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m[r][k]) == 0) continue;
      Rational f = m[r][k] / p;
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
      for (std::size_t c = k; c < n; ++c) m[c][r] = m[r][c];
    }
  }
  return out;
}

SignatureReport validate_signature(const IntersectionLattice& lattice) {
  SignatureReport report;
  report.inertia = inertia(lattice);
  const auto& in = report.inertia;
  report.hyperbolic = in.positive == 1 && in.zero == 0 && in.negative + 1 == lattice.rank();
  std::ostringstream msg;
  msg << "inertia (n+, n-, n0) = (" << in.positive << ", " << in.negative << ", " << in.zero
      << "); required (1, " << lattice.rank() - 1 << ", 0)";
  report.diagnostic = msg.str();
  return report;
}

void require_hyperbolic(const IntersectionLattice& lattice) {
  auto report = validate_signature(lattice);
  if (!report.hyperbolic) {
    throw InputError("intersection form must have signature (1, rank-1) by the Hodge index "
                     "theorem: " + report.diagnostic);
  }
}

Integer genus(const IntersectionLattice& lattice, const DivisorClass& curve) {
  if (!lattice.canonical()) throw Unsupported("genus needs a canonical class on the lattice");
  Integer twice = pair(lattice, curve, curve + *lattice.canonical());
  if (mpz_odd_p(twice.get_mpz_t())) {
    throw InputError("C.(C+K) = " + twice.get_str() + " is odd; " + curve.str() +
                     " is not the class of a smooth curve");
  }
  return twice / 2 + 1;
}

}  // namespace lowdeg
