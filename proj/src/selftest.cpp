#include "lowdeg/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lowdeg/cone.hpp"
#include "lowdeg/destabilizer.hpp"
#include "lowdeg/exceptional.hpp"
#include "lowdeg/invariants.hpp"
#include "lowdeg/oracle.hpp"
#include "lowdeg/sheaf.hpp"
#include "lowdeg/surface_model.hpp"

namespace lowdeg {

namespace {

using oracle::Mat;
using oracle::Vec;

struct TestCone {
  std::string name;
  Mat gram;
  std::vector<Vec> rays;
  Vec p;
};

IntersectionLattice lattice_of(const Mat& gram) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : gram) {
    rows.emplace_back();
    for (long long v : r) rows.back().emplace_back(static_cast<long>(v));
  }
  return IntersectionLattice(std::move(rows));
}

RationalCone cone_of(const TestCone& t) {
  std::vector<DivisorClass> rays;
  for (const auto& r : t.rays) rays.push_back(oracle::from_vec(r));
  return RationalCone::from_rays(lattice_of(t.gram), std::move(rays));
}

std::vector<TestCone> test_cones() {
  return {
      {"rank1 d=1", {{1}}, {{1}}, {1}},
      {"rank1 d=3", {{3}}, {{1}}, {1}},
      {"p1p1 <(1,2),(2,1)>", {{0, 1}, {1, 0}}, {{1, 2}, {2, 1}}, {1, 1}},
      {"p1p1 <(1,1)>", {{0, 1}, {1, 0}}, {{1, 1}}, {1, 1}},
      {"[[2,1],[1,-2]] <(1,0),(1,1)>", {{2, 1}, {1, -2}}, {{1, 0}, {1, 1}}, {1, 0}},
      {"diag(1,-1,-1) simplicial", {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
       {{3, 1, 1}, {3, 1, 0}, {3, 0, 1}}, {1, 0, 0}},
  };
}

std::vector<SurfaceModel> builtin_models() {
  return {SurfaceModel::plane(), SurfaceModel::p1xp1(), SurfaceModel::exp1(),
          SurfaceModel::rank1(2), SurfaceModel::complete_intersection({9, 10})};
}

class Collector {
 public:
  explicit Collector(std::vector<SelftestResult>& out) : out_(out) {}
  template <class Fn>
  void check(const std::string& property, Fn&& fn) {
    SelftestResult r{property, true, {}};
    std::ostringstream detail;
    try {
      r.passed = fn(detail);
    } catch (const std::exception& e) {
      r.passed = false;
      detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    out_.push_back(std::move(r));
  }

 private:
  std::vector<SelftestResult>& out_;
};

std::string show(const Vec& v) { return oracle::from_vec(v).str(); }

}  // namespace

std::vector<SelftestResult> run_selftest(const SelftestOptions& options) {
  std::vector<SelftestResult> results;
  Collector c(results);

  c.check("built-in lattices have signature (1, rank-1)", [&](std::ostream& d) {
    for (const auto& model : builtin_models()) {
      Mat g = oracle::gram_of(model.lattice());
      if (options.perturb_gram)
        for (std::size_t i = 0; i < g.size(); ++i) g[i][i] += 2;
      auto report = validate_signature(lattice_of(g));
      auto reference = oracle::charpoly_inertia(g);
      if (!report.hyperbolic || reference.positive != 1 || reference.zero != 0) {
        d << model.name() << ": " << report.diagnostic;
        return false;
      }
    }
    return true;
  });

  c.check("inertia agrees with the characteristic polynomial", [&](std::ostream& d) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4), size(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t n = static_cast<std::size_t>(size(rng));
      Mat g(n, Vec(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = entry(rng);
      auto got = inertia(lattice_of(g));
      auto want = oracle::charpoly_inertia(g);
      if (got.positive != want.positive || got.negative != want.negative || got.zero != want.zero) {
        d << "trial " << trial << " disagrees";
        return false;
      }
    }
    return true;
  });

  c.check("exceptional sets are complete and sound", [&](std::ostream& d) {
    bool ok = true;
    for (const auto& t : test_cones()) {
      auto cone = cone_of(t);
      auto p = oracle::from_vec(t.p);
      auto proven = exc_set(cone, p);
      Integer scan_to = proven.level_bound - options.level_bound_decrement;
      auto report = exc_set_to_level(cone, p, scan_to);
      auto want = oracle::exceptional_classes(t.gram, t.rays, t.p, proven.level_bound.get_si() + 5);
      std::vector<Vec> got;
      for (const auto& m : report.members) got.push_back(oracle::to_vec(m.cls));
      if (got != want) {
        d << (ok ? "" : "; ") << t.name << ": library found " << got.size() << " members, box search "
          << want.size();
        int shown = 0;
        for (const auto& w : want) {
          if (std::find(got.begin(), got.end(), w) == got.end() && shown++ < 3) d << ", missed " << show(w);
        }
        ok = false;
        continue;
      }
      for (const auto& m : report.members) {
        if (!(m.nine_p_degree > m.square) || !membership(cone, m.cls)) {
          d << t.name << ": unsound member " << m.cls.str();
          return false;
        }
      }
    }
    return ok;
  });

  c.check("level slices match box enumeration", [&](std::ostream& d) {
    for (const auto& t : test_cones()) {
      auto cone = cone_of(t);
      auto p = oracle::from_vec(t.p);
      const long top = t.gram.size() > 2 ? 25 : 50;
      for (long level = 1; level <= top; ++level) {
        std::vector<Vec> got;
        for (const auto& x : lattice_points_at_level(cone, p, Integer(level)))
          got.push_back(oracle::to_vec(x));
        if (got != oracle::points_at_level(t.gram, t.rays, t.p, level)) {
          d << t.name << " level " << level;
          return false;
        }
      }
    }
    return true;
  });

  c.check("ray and facet membership agree", [&](std::ostream& d) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(-12, 12);
    for (const auto& t : test_cones()) {
      auto cone = facets_from_rays(cone_of(t));
      for (int trial = 0; trial < 1000; ++trial) {
        Vec x(t.gram.size());
        for (auto& v : x) v = coord(rng);
        auto cls = oracle::from_vec(x);
        bool by_rays = member_by_rays(cone.rays(), cls);
        bool by_facets = member_by_facets(*cone.facets(), cls);
        bool reference = oracle::in_simplicial_cone(t.rays, x);
        if (by_rays != by_facets || by_rays != reference) {
          d << t.name << " at " << show(x);
          return false;
        }
      }
    }
    return true;
  });

  c.check("destabilizer candidates match box search (C^2 <= 100)", [&](std::ostream& d) {
    for (const auto& model : {SurfaceModel::p1xp1(), SurfaceModel::exp1()}) {
      Mat g = oracle::gram_of(model.lattice());
      for (long a = 1; a <= 50; ++a) {
        for (long b = 1; 2 * a * b <= 100; ++b) {
          long c2 = 2 * a * b;
          long e = (c2 - 1) / 4;
          DestabilizerQuery q(model, DivisorClass{a, b}, Integer(e));
          auto got = enumerate_candidates(q);
          auto want = oracle::destabilizer_candidates(g, {a, b}, e, a + b);
          std::vector<Vec> raw;
          for (const auto& x : got.raw) raw.push_back(oracle::to_vec(x));
          if (raw != want) {
            d << model.name() << " C=(" << a << "," << b << ") e=" << e;
            return false;
          }
        }
      }
    }
    return true;
  });

  c.check("E x P1 gonality certificates (4 <= gamma <= 10)", [&](std::ostream& d) {
    for (long gamma = 4; gamma <= 10; ++gamma) {
      for (long alpha = (gamma + 1) / 2; alpha <= gamma; ++alpha) {
        DestabilizerQuery q(SurfaceModel::exp1(), DivisorClass{gamma, alpha}, Integer(gamma - 1));
        auto cert = contradiction_certificate(q);
        auto bounds = certify({SurfaceModel::exp1(), DivisorClass{gamma, alpha}, {}, {}});
        if (cert.verdict != Verdict::GonalityExceedsDegree || bounds.gon_lo != gamma ||
            bounds.gon_hi != gamma || bounds.airr_lo != alpha || bounds.airr_hi != alpha) {
          d << "(" << gamma << "," << alpha << ")";
          return false;
        }
      }
    }
    return true;
  });

  c.check("P1xP1 a.irr table", [&](std::ostream& d) {
    for (long d1 = 1; d1 <= 8; ++d1) {
      for (long d2 = d1; d2 <= 8; ++d2) {
        CurveSpec spec{SurfaceModel::p1xp1(), DivisorClass{d1, d2}, {}, {}};
        if (d1 == 3 && d2 == 3) spec.bielliptic = false;
        long want = (d1 == 2 && d2 == 2) ? 1 : d1;
        auto cert = certify(spec);
        if (cert.gon_lo != d1 || cert.gon_hi != d1 || cert.airr_lo != want || cert.airr_hi != want) {
          d << "(" << d1 << "," << d2 << ")";
          return false;
        }
      }
    }
    CurveSpec bielliptic{SurfaceModel::p1xp1(), DivisorClass{3, 3}, {}, true};
    auto cert = certify(bielliptic);
    if (cert.airr_lo != 2 || cert.airr_hi != 2) {
      d << "(3,3) bielliptic";
      return false;
    }
    return true;
  });

  c.check("Hodge index inequality on random ample pairs", [&](std::ostream& d) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coord(1, 200);
    for (const auto& model : builtin_models()) {
      const auto& lattice = model.lattice();
      for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Integer> a, b;
        for (std::size_t i = 0; i < lattice.rank(); ++i) {
          a.emplace_back(coord(rng));
          b.emplace_back(coord(rng));
        }
        DivisorClass x(a), y(b);
        Integer xy = pair(lattice, x, y);
        if (square(lattice, x) * square(lattice, y) > xy * xy) {
          d << model.name() << ": " << x.str() << ", " << y.str();
          return false;
        }
      }
    }
    return true;
  });

  c.check("kernel sheaf discriminant is C^2 - 4e", [&](std::ostream& d) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coord(1, 60), deg(0, 500);
    for (const auto& model : builtin_models()) {
      const auto& lattice = model.lattice();
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> v;
        for (std::size_t i = 0; i < lattice.rank(); ++i) v.emplace_back(coord(rng));
        DivisorClass cls(v);
        Integer e = deg(rng);
        auto ch = kernel_sheaf_character(lattice, cls, e);
        Integer c2 = square(lattice, cls);
        if (discriminant(lattice, ch) != Rational(c2 - 4 * e) ||
            bogomolov_unstable(lattice, ch) != (4 * e < c2)) {
          d << model.name() << " C=" << cls.str() << " e=" << e.get_str();
          return false;
        }
      }
    }
    return true;
  });

  return results;
}

bool print_selftest(const std::vector<SelftestResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.property;
    if (!r.passed && !r.detail.empty()) out << ": " << r.detail;
    out << '\n';
    all = all && r.passed;
  }
  out << (all ? "selftest: all properties passed\n" : "selftest: FAILURES\n");
  return all;
}

}  // namespace lowdeg
