#include "lowdeg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowdeg::oracle {

namespace {

long long det(Mat m) {
  // Bareiss fraction-free elimination; exact for the small sizes used here.
  const std::size_t n = m.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0, last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

long long pair(const Mat& gram, const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram[i][j] * b[j];
  return s;
}

bool in_simplicial_cone(const std::vector<Vec>& rays, const Vec& x) {
  const std::size_t n = x.size();
  if (rays.size() == 1) {
    const Vec& r = rays[0];
    // x = t r with t >= 0.
    std::size_t k = 0;
    while (k < n && r[k] == 0) ++k;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] * r[k] != x[k] * r[i]) return false;
    return x[k] * r[k] >= 0;
  }
  if (rays.size() != n) throw std::invalid_argument("oracle cone must be simplicial");
  Mat cols(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[i][j] = rays[j][i];
  long long d = det(cols);
  if (d == 0) throw std::invalid_argument("oracle rays are dependent");
  for (std::size_t j = 0; j < n; ++j) {
    Mat m = cols;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = x[i];
    long long dj = det(m);
    if ((dj < 0 && d > 0) || (dj > 0 && d < 0)) return false;
  }
  return true;
}

std::pair<Vec, Vec> level_box(const Mat& gram, const std::vector<Vec>& rays, const Vec& p,
                              long long max_level) {
  const std::size_t n = p.size();
  Vec lo(n, 0), hi(n, 0);
  for (const auto& r : rays) {
    long long rp = pair(gram, r, p);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], floor_div(r[i] * max_level, rp));
      hi[i] = std::max(hi[i], ceil_div(r[i] * max_level, rp));
    }
  }
  return {lo, hi};
}

void for_each_box_point(const Vec& lo, const Vec& hi, const std::function<void(const Vec&)>& fn) {
  Vec x = lo;
  const std::size_t n = lo.size();
  if (n == 0) return;
  while (true) {
    fn(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

std::vector<Vec> points_at_level(const Mat& gram, const std::vector<Vec>& rays, const Vec& p,
                                 long long level) {
  auto [lo, hi] = level_box(gram, rays, p, level);
  std::vector<Vec> out;
  for_each_box_point(lo, hi, [&](const Vec& x) {
    if (pair(gram, x, p) == level && in_simplicial_cone(rays, x)) out.push_back(x);
  });
  return out;
}

std::vector<Vec> exceptional_classes(const Mat& gram, const std::vector<Vec>& rays, const Vec& p,
                                     long long max_level) {
  auto [lo, hi] = level_box(gram, rays, p, max_level);
  std::vector<Vec> out;
  for_each_box_point(lo, hi, [&](const Vec& x) {
    long long level = pair(gram, x, p);
    if (level <= 0 || level > max_level) return;
    if (9 * level > pair(gram, x, x) && in_simplicial_cone(rays, x)) out.push_back(x);
  });
  std::stable_sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return pair(gram, a, p) < pair(gram, b, p);
  });
  return out;
}

std::vector<Vec> destabilizer_candidates(const Mat& gram, const Vec& curve, long long degree,
                                         long long box) {
  const long long c2 = pair(gram, curve, curve);
  Vec lo(curve.size(), 0), hi(curve.size(), box);
  std::vector<Vec> out;
  for_each_box_point(lo, hi, [&](const Vec& d) {
    long long cd = pair(gram, curve, d);
    if (2 * cd < c2 && cd - pair(gram, d, d) <= degree) out.push_back(d);
  });
  return out;
}

Inertia charpoly_inertia(const Mat& gram) {
  // Faddeev-LeVerrier: p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0.
  const std::size_t n = gram.size();
  using RMat = std::vector<std::vector<Rational>>;
  RMat a(n, std::vector<Rational>(n)), m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(gram[i][j]));
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    RMat next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
        if (i == j) next[i][j] += c[n - k + 1];
      }
    m = next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  Inertia out;
  std::size_t low = 0;
  while (low < n && sgn(c[low]) == 0) ++low;
  out.zero = low;
  std::vector<Rational> pos(c.begin(), c.end()), neg(c.begin(), c.end());
  for (std::size_t k = 0; k <= n; ++k)
    if (k % 2 == 1) neg[k] = -neg[k];
  out.positive = static_cast<std::size_t>(sign_changes(pos));
  out.negative = static_cast<std::size_t>(sign_changes(neg));
  return out;
}

Vec to_vec(const DivisorClass& d) {
  Vec v;
  for (const auto& c : d.coords()) v.push_back(c.get_si());
  return v;
}

DivisorClass from_vec(const Vec& v) {
  std::vector<Integer> c;
  for (long long x : v) c.emplace_back(static_cast<long>(x));
  return DivisorClass(std::move(c));
}

Mat gram_of(const IntersectionLattice& lattice) {
  Mat g(lattice.rank(), Vec(lattice.rank()));
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    for (std::size_t j = 0; j < lattice.rank(); ++j) g[i][j] = lattice.gram(i, j).get_si();
  return g;
}

}  // namespace lowdeg::oracle
