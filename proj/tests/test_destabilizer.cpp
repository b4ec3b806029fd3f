#include <gtest/gtest.h>

#include <algorithm>

#include "lowdeg/destabilizer.hpp"
#include "lowdeg/errors.hpp"
#include "lowdeg/oracle.hpp"

namespace lowdeg {
namespace {

using Classes = std::vector<DivisorClass>;

CandidateSet candidates(const SurfaceModel& m, DivisorClass c, long e) {
  return enumerate_candidates(DestabilizerQuery(m, std::move(c), Integer(e)));
}

TEST(Destabilizer, ExP1FiveFour) {
  auto set = candidates(SurfaceModel::exp1(), {5, 4}, 4);
  EXPECT_EQ(set.raw, (Classes{{0, 0}, {1, 0}}));
  EXPECT_TRUE(set.pencil_filtered.empty());
  auto cert = contradiction_certificate(DestabilizerQuery(SurfaceModel::exp1(), {5, 4}, Integer(4)));
  EXPECT_EQ(cert.verdict, Verdict::GonalityExceedsDegree);
  EXPECT_EQ(to_string(cert.verdict), "gon_exceeds_degree");
}

TEST(Destabilizer, QuadricFourFourCaseAnalysis) {
  auto set = candidates(SurfaceModel::p1xp1(), {4, 4}, 6);
  EXPECT_EQ(set.raw, (Classes{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(set.pencil_filtered, (Classes{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(set.residual_degrees, (std::vector<Integer>{-2, -2, 2}));
  auto cert = contradiction_certificate(DestabilizerQuery(SurfaceModel::p1xp1(), {4, 4}, Integer(6)));
  EXPECT_EQ(cert.verdict, Verdict::CandidatesSurvive);
  ASSERT_EQ(cert.survivors.size(), 1u);
  EXPECT_EQ(cert.survivors[0].cls, (DivisorClass{1, 1}));
  EXPECT_EQ(cert.survivors[0].residual_degree, 2);
  EXPECT_EQ(cert.residual_pruned, (Classes{{0, 1}, {1, 0}}));
}

TEST(Destabilizer, QuadricFourFiveDropsTheDiagonal) {
  auto set = candidates(SurfaceModel::p1xp1(), {4, 5}, 6);
  EXPECT_EQ(set.pencil_filtered, (Classes{{0, 1}, {1, 0}}));
  auto small = candidates(SurfaceModel::p1xp1(), {4, 5}, 3);
  EXPECT_TRUE(small.pencil_filtered.empty());
}

TEST(Destabilizer, ZeroDegreeLeavesOnlyTheZeroClass) {
  auto set = candidates(SurfaceModel::p1xp1(), {3, 3}, 0);
  EXPECT_EQ(set.raw, (Classes{{0, 0}}));
  EXPECT_TRUE(set.pencil_filtered.empty());
}

TEST(Destabilizer, PencilCapableClasses) {
  auto q = SurfaceModel::p1xp1();
  EXPECT_FALSE(pencil_capable(q, {0, 0}));
  EXPECT_TRUE(pencil_capable(q, {0, 1}));
  EXPECT_TRUE(pencil_capable(q, {2, 3}));
  EXPECT_FALSE(pencil_capable(q, {-1, 3}));
  auto e = SurfaceModel::exp1();
  EXPECT_FALSE(pencil_capable(e, {1, 0}));  // a single fiber of E x P1 -> E does not move
  EXPECT_TRUE(pencil_capable(e, {2, 0}));
  EXPECT_TRUE(pencil_capable(e, {0, 1}));
  EXPECT_TRUE(pencil_capable(SurfaceModel::plane(), {1}));
  EXPECT_FALSE(pencil_capable(SurfaceModel::plane(), {0}));
  EXPECT_THROW(pencil_capable(SurfaceModel::complete_intersection({9, 10}), {1}), Unsupported);
}

TEST(Destabilizer, QueryPreconditions) {
  EXPECT_THROW(DestabilizerQuery(SurfaceModel::p1xp1(), {2, 2}, Integer(2)), InputError);  // 4e = C^2
  EXPECT_THROW(DestabilizerQuery(SurfaceModel::p1xp1(), {0, 3}, Integer(0)), InputError);  // not ample
  EXPECT_THROW(DestabilizerQuery(SurfaceModel::p1xp1(), {3, 3}, Integer(-1)), InputError);
  try {
    DestabilizerQuery(SurfaceModel::exp1(), {4, 2}, Integer(4));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("C^2/4 required"), std::string::npos);
  }
}

TEST(Destabilizer, RawSetMatchesBoxSearch) {
  for (const auto& m : {SurfaceModel::p1xp1(), SurfaceModel::exp1()}) {
    auto g = oracle::gram_of(m.lattice());
    for (long a = 1; a <= 40; ++a) {
      for (long b = 1; 2 * a * b <= 400; ++b) {
        long e = (2 * a * b - 1) / 4;
        for (long deg : {0L, e / 2, e}) {
          auto set = candidates(m, {a, b}, deg);
          std::vector<oracle::Vec> raw;
          for (const auto& x : set.raw) raw.push_back(oracle::to_vec(x));
          ASSERT_EQ(raw, oracle::destabilizer_candidates(g, {a, b}, deg, a + b))
              << m.name() << " (" << a << "," << b << ") e=" << deg;
        }
      }
    }
  }
}

TEST(Destabilizer, RankOneMatchesBoxSearch) {
  for (long d = 1; d <= 4; ++d) {
    auto m = d == 1 ? SurfaceModel::plane() : SurfaceModel::rank1(d);
    for (long a = 1; a <= 15; ++a) {
      long c2 = a * a * d;
      for (long e = 0; 4 * e < c2; e += 3) {
        auto set = candidates(m, {a}, e);
        std::vector<oracle::Vec> raw;
        for (const auto& x : set.raw) raw.push_back(oracle::to_vec(x));
        ASSERT_EQ(raw, oracle::destabilizer_candidates({{d}}, {a}, e, a * d)) << d << " " << a << " " << e;
      }
    }
  }
}

TEST(Destabilizer, RawCandidatesObeyHodgeIndex) {
  for (const auto& m : {SurfaceModel::p1xp1(), SurfaceModel::exp1()}) {
    const auto l = m.lattice();
    for (long a = 1; a <= 12; ++a) {
      for (long b = 1; b <= 12; ++b) {
        DivisorClass c{a, b};
        Integer c2 = square(l, c);
        long e = static_cast<long>((c2.get_si() - 1) / 4);
        for (const auto& d : candidates(m, c, e).raw) {
          Integer cd = pair(l, c, d);
          ASSERT_LE(square(l, d) * c2, cd * cd) << c.str() << " " << d.str();
        }
      }
    }
  }
}

TEST(Destabilizer, ExP1CandidatesAtTwiceAlphaMinusTwo) {
  const Classes allowed{{0, 1}, {1, 1}};
  for (long gamma = 4; gamma <= 12; ++gamma) {
    for (long alpha = std::max(2L, (gamma + 1) / 2); alpha <= gamma; ++alpha) {
      auto set = candidates(SurfaceModel::exp1(), {gamma, alpha}, 2 * alpha - 2);
      for (const auto& d : set.pencil_filtered) {
        EXPECT_NE(std::find(allowed.begin(), allowed.end(), d), allowed.end())
            << "(" << gamma << "," << alpha << "): " << d.str();
      }
    }
  }
}

TEST(Destabilizer, ExP1GridCertifiesGonality) {
  for (long gamma = 4; gamma <= 10; ++gamma) {
    for (long alpha = (gamma + 1) / 2; alpha <= gamma; ++alpha) {
      auto cert = contradiction_certificate(DestabilizerQuery(SurfaceModel::exp1(), {gamma, alpha}, Integer(gamma - 1)));
      EXPECT_EQ(cert.verdict, Verdict::GonalityExceedsDegree) << gamma << "," << alpha;
      EXPECT_TRUE(cert.candidates.pencil_filtered.empty());
    }
  }
}

TEST(Destabilizer, QuadricGonalityLowerBound) {
  for (long d1 = 1; d1 <= 8; ++d1) {
    for (long d2 = d1; d2 <= 8; ++d2) {
      auto cert = contradiction_certificate(DestabilizerQuery(SurfaceModel::p1xp1(), {d1, d2}, Integer(d1 - 1)));
      EXPECT_EQ(cert.verdict, Verdict::GonalityExceedsDegree) << d1 << "," << d2;
    }
  }
}

TEST(Destabilizer, GenericModelReportsUnfilteredCandidates) {
  auto l = IntersectionLattice::from_rows({{0, 1}, {1, 0}});
  auto quadrant = RationalCone::from_rays(l, {DivisorClass{1, 0}, DivisorClass{0, 1}});
  auto m = SurfaceModel::generic(l, quadrant, quadrant, true, std::nullopt);
  auto set = candidates(m, {4, 4}, 6);
  EXPECT_FALSE(set.pencil_filter_applied);
  EXPECT_TRUE(set.warning.has_value());
  EXPECT_EQ(set.pencil_filtered, set.raw);
  auto cert = contradiction_certificate(DestabilizerQuery(m, {4, 4}, Integer(6)));
  EXPECT_EQ(cert.verdict, Verdict::CandidatesSurvive);
}

}  // namespace
}  // namespace lowdeg
