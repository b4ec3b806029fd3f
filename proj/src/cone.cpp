#include "lowdeg/cone.hpp"

#include <algorithm>
#include <functional>

#include "exact_linalg.hpp"
#include "lowdeg/errors.hpp"

namespace lowdeg {

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order; stops early
// when fn returns true. Returns whether it stopped early.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    if (k == 0) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<DivisorClass> normalize_generators(std::vector<DivisorClass> gens, std::size_t rank,
                                               const char* what) {
  for (auto& g : gens) {
    if (g.rank() != rank) {
      throw InputError(std::string(what) + " " + g.str() + " has the wrong length for rank " +
                       std::to_string(rank));
    }
    if (g.is_zero()) throw InputError(std::string(what) + " may not be the zero vector");
    g = g.primitive();
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

void require_rank_bound(std::size_t rank, std::size_t max_rank) {
  if (rank > max_rank) {
    throw Unsupported("facet/ray synthesis is limited to rank <= " + std::to_string(max_rank) +
                      " (got rank " + std::to_string(rank) + ")");
  }
}

void require_pointed(const std::vector<DivisorClass>& rays) {
  for (const auto& r : rays) {
    if (member_by_rays(rays, -r)) {
      throw InputError("cone is not pointed: both " + r.str() + " and its negative are members");
    }
  }
}

}  // namespace

bool member_by_rays(const std::vector<DivisorClass>& rays, const DivisorClass& x) {
  if (x.is_zero()) return true;
  if (rays.empty()) return false;
  const std::size_t rank = x.rank();
  const std::size_t top = std::min(rays.size(), rank);
  for (std::size_t k = 1; k <= top; ++k) {
    bool found = for_each_subset(rays.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<DivisorClass> gens;
      gens.reserve(idx.size());
      for (auto i : idx) gens.push_back(rays[i]);
      if (detail::matrix_rank(gens, rank) != k) return false;
      auto coeff = detail::span_coefficients(gens, x);
      if (!coeff) return false;
      return std::all_of(coeff->begin(), coeff->end(), [](const Rational& c) { return sgn(c) >= 0; });
    });
    if (found) return true;
  }
  return false;
}

bool member_by_facets(const std::vector<DivisorClass>& facets, const DivisorClass& x) {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const DivisorClass& f) { return sgn(detail::dot(f, x)) >= 0; });
}

bool membership(const RationalCone& cone, const DivisorClass& x) {
  cone.lattice().check(x);
  if (cone.facets()) return member_by_facets(*cone.facets(), x);
  return member_by_rays(cone.rays(), x);
}

std::vector<DivisorClass> facet_normals(const std::vector<DivisorClass>& rays, std::size_t rank) {
  const std::size_t span_dim = detail::matrix_rank(rays, rank);
  const auto complement = detail::integer_kernel(rays, rank);

  std::vector<DivisorClass> out;
  for (const auto& w : complement) {
    out.push_back(w);
    out.push_back(-w);
  }
  if (span_dim > 0) {
    // A facet normal lies in span(rays) and vanishes on span_dim-1
    // independent rays; keep those that are one-signed on every ray.
    for_each_subset(rays.size(), span_dim - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<DivisorClass> rows = complement;
      for (auto i : idx) rows.push_back(rays[i]);
      if (detail::matrix_rank(rows, rank) != rank - 1) return false;
      auto kernel = detail::integer_kernel(rows, rank);
      if (kernel.size() != 1) throw InvariantError("facet_normals: kernel dimension");
      DivisorClass f = kernel.front();
      bool nonneg = true, nonpos = true;
      for (const auto& r : rays) {
        int s = sgn(detail::dot(f, r));
        nonneg = nonneg && s >= 0;
        nonpos = nonpos && s <= 0;
      }
      if (nonneg) out.push_back(f);
      else if (nonpos) out.push_back(-f);
      return false;
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DivisorClass> extreme_rays(const std::vector<DivisorClass>& facets, std::size_t rank) {
  if (detail::matrix_rank(facets, rank) != rank) {
    throw InputError("inequalities do not cut out a pointed cone (rank of the facet matrix < " +
                     std::to_string(rank) + ")");
  }
  std::vector<DivisorClass> out;
  for_each_subset(facets.size(), rank - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<DivisorClass> rows;
    for (auto i : idx) rows.push_back(facets[i]);
    if (detail::matrix_rank(rows, rank) != rank - 1) return false;
    auto kernel = detail::integer_kernel(rows, rank);
    DivisorClass v = kernel.front();
    if (member_by_facets(facets, v)) out.push_back(v);
    else if (member_by_facets(facets, -v)) out.push_back(-v);
    return false;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RationalCone RationalCone::from_rays(IntersectionLattice lattice, std::vector<DivisorClass> rays) {
  rays = normalize_generators(std::move(rays), lattice.rank(), "ray");
  require_pointed(rays);
  return RationalCone(std::move(lattice), std::move(rays), std::nullopt);
}

RationalCone RationalCone::from_facets(IntersectionLattice lattice,
                                       std::vector<DivisorClass> facets, std::size_t max_rank) {
  require_rank_bound(lattice.rank(), max_rank);
  facets = normalize_generators(std::move(facets), lattice.rank(), "facet");
  auto rays = extreme_rays(facets, lattice.rank());
  return RationalCone(std::move(lattice), std::move(rays), std::move(facets));
}

RationalCone RationalCone::from_rays_and_facets(IntersectionLattice lattice,
                                                std::vector<DivisorClass> rays,
                                                std::vector<DivisorClass> facets,
                                                std::size_t max_rank) {
  require_rank_bound(lattice.rank(), max_rank);
  rays = normalize_generators(std::move(rays), lattice.rank(), "ray");
  facets = normalize_generators(std::move(facets), lattice.rank(), "facet");
  require_pointed(rays);
  for (const auto& r : rays) {
    if (!member_by_facets(facets, r)) {
      throw InputError("ray " + r.str() + " violates a facet inequality; rays and facets "
                       "describe different cones");
    }
  }
  for (const auto& v : extreme_rays(facets, lattice.rank())) {
    if (!member_by_rays(rays, v)) {
      throw InputError("facet cone has extreme ray " + v.str() +
                       " outside the ray cone; rays and facets describe different cones");
    }
  }
  return RationalCone(std::move(lattice), std::move(rays), std::move(facets));
}

RationalCone facets_from_rays(const RationalCone& cone, std::size_t max_rank) {
  require_rank_bound(cone.lattice().rank(), max_rank);
  auto facets = facet_normals(cone.rays(), cone.lattice().rank());
  return RationalCone::from_rays_and_facets(cone.lattice(), cone.rays(), std::move(facets),
                                            max_rank);
}

namespace {

void require_bounded_slice(const RationalCone& cone, const DivisorClass& level_form) {
  cone.lattice().check(level_form);
  for (const auto& v : cone.rays()) {
    if (sgn(pair(cone.lattice(), v, level_form)) <= 0) {
      throw InputError("slice unbounded: ray " + v.str() + " has non-positive intersection with " +
                       level_form.str());
    }
  }
}

}  // namespace

SliceMinimum slice_min_square(const RationalCone& cone, const DivisorClass& level_form) {
  const auto& lattice = cone.lattice();
  require_hyperbolic(lattice);
  lattice.check(level_form);
  if (sgn(square(lattice, level_form)) <= 0) {
    throw InputError("level form " + level_form.str() + " must have positive square");
  }
  if (cone.rays().empty()) throw InputError("cone has no rays; the slice is empty");
  require_bounded_slice(cone, level_form);

  std::optional<SliceMinimum> best;
  for (const auto& v : cone.rays()) {
    Integer vp = pair(lattice, v, level_form);
    Rational q(square(lattice, v), vp * vp);
    q.canonicalize();
    if (!best || q < best->value) best = SliceMinimum{q, v};
  }
  return *best;
}

SlicePolytope slice_polytope(const RationalCone& cone, const DivisorClass& level_form,
                             const Integer& level) {
  require_bounded_slice(cone, level_form);
  SlicePolytope out{level_form, level, {}};
  for (const auto& v : cone.rays()) {
    Rational scale(level, pair(cone.lattice(), v, level_form));
    scale.canonicalize();
    std::vector<Rational> vertex;
    vertex.reserve(v.rank());
    for (const auto& c : v.coords()) vertex.push_back(scale * c);
    out.vertices.push_back(std::move(vertex));
  }
  return out;
}

std::vector<DivisorClass> lattice_points_at_level(const RationalCone& cone,
                                                  const DivisorClass& level_form,
                                                  const Integer& level) {
  if (sgn(level) < 0) throw InputError("level must be non-negative");
  const std::size_t n = cone.lattice().rank();
  require_bounded_slice(cone, level_form);
  if (level == 0) return {DivisorClass::zero(n)};
  if (cone.rays().empty()) return {};

  const auto poly = slice_polytope(cone, level_form, level);
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = poly.vertices.front()[i], mx = mn;
    for (const auto& v : poly.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
  }

  std::optional<std::vector<DivisorClass>> facets = cone.facets();
  if (!facets && n <= kDefaultMaxRank) facets = facet_normals(cone.rays(), n);
  auto inside = [&](const DivisorClass& x) {
    return facets ? member_by_facets(*facets, x) : member_by_rays(cone.rays(), x);
  };

  // The level equation fixes one coordinate; enumerate the others in the box.
  const auto form = dual_form(cone.lattice(), level_form);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (form[i] != 0 && (pivot == n || abs(form[i]) < abs(form[pivot]))) pivot = i;
  }
  if (pivot == n) throw InvariantError("level form vanishes although the slice is bounded");

  std::vector<DivisorClass> out;
  DivisorClass x = DivisorClass::zero(n);
  std::function<void(std::size_t, Integer)> walk = [&](std::size_t i, Integer partial) {
    if (i == n) {
      Integer rest = level - partial;
      if (!mpz_divisible_p(rest.get_mpz_t(), form[pivot].get_mpz_t())) return;
      Integer v = rest / form[pivot];
      if (v < lo[pivot] || v > hi[pivot]) return;
      x[pivot] = v;
      if (inside(x)) out.push_back(x);
      return;
    }
    if (i == pivot) {
      walk(i + 1, partial);
      return;
    }
    for (Integer c = lo[i]; c <= hi[i]; ++c) {
      x[i] = c;
      walk(i + 1, partial + form[i] * c);
    }
    x[i] = 0;
  };
  walk(0, Integer(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lowdeg
