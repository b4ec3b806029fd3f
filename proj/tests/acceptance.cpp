// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lowdeg/destabilizer.hpp"
#include "lowdeg/exceptional.hpp"
#include "lowdeg/invariants.hpp"
#include "lowdeg/oracle.hpp"
#include "lowdeg/sheaf.hpp"

using namespace lowdeg;

namespace {

using oracle::Vec;

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void fail_if(bool bad, const std::string& msg) {
    if (bad && pass) {
      pass = false;
      why << msg;
    }
  }
};

bool has_ref(const BoundCertificate& c, const std::string& ref) {
  return std::any_of(c.provenance.begin(), c.provenance.end(), [&](const Provenance& p) { return p.ref == ref; });
}

void rank_one_threshold(Outcome& o) {
  for (long d : {1L, 2L, 3L}) {
    auto l = IntersectionLattice::from_rows({{d}});
    auto report = exc_set(RationalCone::from_rays(l, {DivisorClass{1}}), DivisorClass{1});
    std::vector<DivisorClass> got, want;
    for (const auto& m : report.members) got.push_back(m.cls);
    for (long a = 1; a <= 8; ++a) want.push_back(DivisorClass{a});
    o.fail_if(got != want, "d = " + std::to_string(d) + ": members differ from {1..8}");
  }
}

void exc_completeness(Outcome& o) {
  struct Case {
    std::string name;
    oracle::Mat gram;
    std::vector<Vec> rays;
    Vec p;
  };
  const std::vector<Case> cases = {
      {"p1p1 <(1,2),(2,1)>", {{0, 1}, {1, 0}}, {{1, 2}, {2, 1}}, {1, 1}},
      {"p1p1 <(1,1)>", {{0, 1}, {1, 0}}, {{1, 1}}, {1, 1}},
      {"p1p1 <(1,3),(3,1)> P=(1,2)", {{0, 1}, {1, 0}}, {{1, 3}, {3, 1}}, {1, 2}},
      {"rank1 [[2]]", {{2}}, {{1}}, {1}},
      {"[[2,1],[1,-2]]", {{2, 1}, {1, -2}}, {{1, 0}, {1, 1}}, {1, 0}},
      {"diag(1,-1,-1)", {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, {{3, 1, 1}, {3, 1, 0}, {3, 0, 1}}, {1, 0, 0}},
  };
  for (const auto& c : cases) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : c.gram) rows.push_back(oracle::from_vec(r).coords());
    std::vector<DivisorClass> rays;
    for (const auto& r : c.rays) rays.push_back(oracle::from_vec(r));
    auto report = exc_set(RationalCone::from_rays(IntersectionLattice(rows), rays), oracle::from_vec(c.p));
    std::vector<Vec> got;
    for (const auto& m : report.members) got.push_back(oracle::to_vec(m.cls));
    auto want = oracle::exceptional_classes(c.gram, c.rays, c.p, report.level_bound.get_si() + 5);
    o.fail_if(got != want, c.name + ": differs from box enumeration");
    if (c.name == "p1p1 <(1,2),(2,1)>") {
      o.fail_if(report.level_bound != 20, "level bound is not 20");
      o.fail_if(std::find(got.begin(), got.end(), Vec{6, 12}) == got.end(), "(6,12) missing");
      o.fail_if(std::find(got.begin(), got.end(), Vec{7, 14}) != got.end(), "(7,14) present");
    }
  }
}

void quadric_case_analysis(Outcome& o) {
  using Classes = std::vector<DivisorClass>;
  auto a = enumerate_candidates(DestabilizerQuery(SurfaceModel::p1xp1(), {4, 4}, Integer(6)));
  o.fail_if(a.pencil_filtered != Classes{{0, 1}, {1, 0}, {1, 1}}, "(4,4), e=6: pencil-filtered set differs");
  auto b = enumerate_candidates(DestabilizerQuery(SurfaceModel::p1xp1(), {4, 5}, Integer(6)));
  o.fail_if(std::find(b.pencil_filtered.begin(), b.pencil_filtered.end(), DivisorClass{1, 1}) !=
                b.pencil_filtered.end(),
            "(4,5), e=6: (1,1) present");
  o.fail_if(b.pencil_filtered != Classes{{0, 1}, {1, 0}}, "(4,5), e=6: pencil-filtered set differs");
}

void exp1_gonality(Outcome& o) {
  int cases = 0;
  for (long g = 4; g <= 10; ++g) {
    for (long a = (g + 1) / 2; a <= g; ++a, ++cases) {
      auto cert = contradiction_certificate(DestabilizerQuery(SurfaceModel::exp1(), {g, a}, Integer(g - 1)));
      std::string at = "(" + std::to_string(g) + "," + std::to_string(a) + ")";
      o.fail_if(cert.verdict != Verdict::GonalityExceedsDegree, at + ": no contradiction at e = gamma-1");
      auto b = gon_bounds({SurfaceModel::exp1(), {g, a}, {}, {}});
      o.fail_if(b.lo != g || b.hi != g, at + ": gon != gamma");
    }
  }
  o.fail_if(cases != 30, "grid size " + std::to_string(cases));
}

void discriminant_identity(Outcome& o) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coord(0, 100), deg(0, 5000);
  const std::vector<SurfaceModel> models = {SurfaceModel::plane(), SurfaceModel::p1xp1(), SurfaceModel::exp1(),
                                            SurfaceModel::rank1(2), SurfaceModel::complete_intersection({9, 10})};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& l = models[trial % models.size()].lattice();
    std::vector<Integer> v;
    for (std::size_t i = 0; i < l.rank(); ++i) v.emplace_back(coord(rng));
    DivisorClass c(v);
    Integer e = deg(rng);
    auto ch = kernel_sheaf_character(l, c, e);
    Integer c2 = square(l, c);
    o.fail_if(discriminant(l, ch) != Rational(c2 - 4 * e), "identity fails at " + c.str());
    o.fail_if(bogomolov_unstable(l, ch) != (4 * e < c2), "instability predicate fails at " + c.str());
  }
  const auto q = SurfaceModel::p1xp1().lattice();
  for (long a = 1; a <= 12; ++a) {
    DivisorClass c{a, a};  // C^2 = 2a^2
    Integer c2 = square(q, c);
    if (c2 % 4 == 0) {
      Integer e = c2 / 4;
      o.fail_if(bogomolov_unstable(q, kernel_sheaf_character(q, c, e)), "unstable at e = C^2/4");
      o.fail_if(!bogomolov_unstable(q, kernel_sheaf_character(q, c, e - 1)), "stable at e = C^2/4 - 1");
    }
  }
}

void invariant_tables(Outcome& o) {
  for (long d1 = 1; d1 <= 8; ++d1) {
    for (long d2 = d1; d2 <= 8; ++d2) {
      std::vector<std::pair<std::optional<bool>, long>> variants;
      if (d1 == 3 && d2 == 3) {
        variants = {{true, 2}, {false, 3}};
      } else {
        variants = {{std::nullopt, (d1 == 2 && d2 == 2) ? 1 : d1}};
      }
      for (const auto& [bielliptic, want] : variants) {
        auto c = certify({SurfaceModel::p1xp1(), {d1, d2}, {}, bielliptic});
        o.fail_if(c.airr_lo != want || c.airr_hi != want,
                  "(" + std::to_string(d1) + "," + std::to_string(d2) + "): a.irr differs");
      }
    }
  }
  for (long g = 4; g <= 10; ++g) {
    for (long a = (g + 1) / 2; a <= g; ++a) {
      auto c = certify({SurfaceModel::exp1(), {g, a}, {}, {}});
      o.fail_if(c.gon_lo != g || c.gon_hi != g || c.airr_lo != a || c.airr_hi != a,
                "E x P1 (" + std::to_string(g) + "," + std::to_string(a) + ") differs");
    }
  }
}

void range_and_combiner(Outcome& o) {
  std::vector<CurveSpec> specs;
  for (long d1 = 1; d1 <= 10; ++d1)
    for (long d2 = 1; d2 <= 10; ++d2) specs.push_back({SurfaceModel::p1xp1(), {d1, d2}, {}, {}});
  for (long g = 4; g <= 12; ++g)
    for (long a = (g + 1) / 2; a <= g; ++a) specs.push_back({SurfaceModel::exp1(), {g, a}, {}, {}});
  for (long d = 1; d <= 15; ++d) {
    specs.push_back({SurfaceModel::plane(), {d}, {}, {}});
    specs.push_back({SurfaceModel::plane(), {d}, true, {}});
    specs.push_back({SurfaceModel::plane(), {d}, false, {}});
  }
  for (long deg = 1; deg <= 3; ++deg)
    for (long a = 1; a <= 14; ++a) specs.push_back({SurfaceModel::rank1(deg), {a}, {}, {}});
  for (long d1 = 2; d1 <= 11; ++d1)
    for (long d2 = d1; d2 <= 12; ++d2) specs.push_back(CurveSpec::complete_intersection({d1, d2}));
  for (const auto& s : specs) {
    auto c = certify(s);
    o.fail_if(c.airr_lo < ceil(Rational(c.gon_lo, 2)) || c.airr_hi > c.gon_hi,
              s.model.name() + " " + s.cls.str() + ": range violated");
  }
  auto c = certify({SurfaceModel::exp1(), {10, 5}, {}, {}});
  o.fail_if(has_ref(c, "thm:main_q0"), "E x P1 (10,5) certificate carries thm:main_q0");
  o.fail_if(c.airr_lo != 5 || c.airr_hi != 5, "E x P1 (10,5): a.irr != 5");
}

void hodge_index(Outcome& o) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> coord(1, 1000000);
  const std::vector<SurfaceModel> models = {SurfaceModel::plane(), SurfaceModel::p1xp1(), SurfaceModel::exp1(),
                                            SurfaceModel::rank1(5), SurfaceModel::complete_intersection({9, 10})};
  for (const auto& m : models) {
    const auto& l = m.lattice();
    for (int trial = 0; trial < 100000; ++trial) {
      std::vector<Integer> a, b;
      for (std::size_t i = 0; i < l.rank(); ++i) {
        a.emplace_back(coord(rng));
        b.emplace_back(coord(rng));
      }
      DivisorClass x(a), y(b);
      if (!m.is_ample(x) || !m.is_ample(y)) continue;
      Integer xy = pair(l, x, y);
      if (square(l, x) * square(l, y) > xy * xy) {
        o.fail_if(true, m.name() + ": violation at " + x.str() + ", " + y.str());
        return;
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 rank-1 exceptional threshold {1..8} for d = 1,2,3", rank_one_threshold},
      {"2 exceptional sets equal box enumeration to level_bound + 5", exc_completeness},
      {"3 P1xP1 pencil-filtered candidates (4,4) and (4,5) at e = 6", quadric_case_analysis},
      {"4 E x P1 contradiction at e = gamma-1 and gon = gamma", exp1_gonality},
      {"5 discriminant = C^2 - 4e and instability boundary", discriminant_identity},
      {"6 P1xP1 a.irr table and E x P1 values", invariant_tables},
      {"7 range on every certificate; no C^2/9 bound on E x P1 (10,5)", range_and_combiner},
      {"8 Hodge index on 10^5 random ample pairs per lattice", hodge_index},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail_if(true, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    if (!o.pass) std::cout << " -- " << o.why.str();
    std::cout << "\n";
    failures += !o.pass;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
