#include <gtest/gtest.h>

#include <random>

#include "lowdeg/errors.hpp"
#include "lowdeg/lattice.hpp"
#include "lowdeg/oracle.hpp"
#include "lowdeg/surface_model.hpp"

namespace lowdeg {
namespace {

IntersectionLattice quadric() { return IntersectionLattice::from_rows({{0, 1}, {1, 0}}, DivisorClass{-2, -2}); }

TEST(DivisorClass, ArithmeticAndOrdering) {
  DivisorClass a{2, 4}, b{1, -1};
  EXPECT_EQ(a + b, (DivisorClass{3, 3}));
  EXPECT_EQ(a - b, (DivisorClass{1, 5}));
  EXPECT_EQ(-b, (DivisorClass{-1, 1}));
  EXPECT_EQ(Integer(3) * b, (DivisorClass{3, -3}));
  EXPECT_EQ(a.content(), 2);
  EXPECT_EQ(a.primitive(), (DivisorClass{1, 2}));
  EXPECT_TRUE(DivisorClass::zero(3).is_zero());
  EXPECT_EQ(DivisorClass::zero(2).primitive(), DivisorClass::zero(2));
  EXPECT_LT((DivisorClass{0, 5}), (DivisorClass{1, 0}));
  EXPECT_LT((DivisorClass{1, 0}), (DivisorClass{1, 1}));
  EXPECT_EQ(a.str(), "(2,4)");
}

TEST(IntersectionLattice, RejectsMalformedGram) {
  EXPECT_THROW(IntersectionLattice({}), InputError);
  EXPECT_THROW(IntersectionLattice::from_rows({{0, 1}, {2, 0}}), InputError);
  EXPECT_THROW(IntersectionLattice::from_rows({{0, 1}, {1}}), InputError);
  EXPECT_THROW(IntersectionLattice::from_rows({{1}}, DivisorClass{1, 2}), InputError);
}

TEST(IntersectionLattice, PairsThroughTheGram) {
  auto q = quadric();
  EXPECT_EQ(pair(q, DivisorClass{4, 5}, DivisorClass{1, 0}), 5);
  EXPECT_EQ(square(q, DivisorClass{4, 5}), 40);
  EXPECT_EQ(dual_form(q, DivisorClass{4, 5}), (std::vector<Integer>{5, 4}));
  EXPECT_THROW(q.check(DivisorClass{1}), InputError);
}

TEST(IntersectionLattice, GenusFromAdjunction) {
  auto q = quadric();
  EXPECT_EQ(genus(q, DivisorClass{4, 5}), 12);  // (d1-1)(d2-1)
  EXPECT_EQ(genus(SurfaceModel::plane().lattice(), DivisorClass{5}), 6);
  EXPECT_EQ(genus(SurfaceModel::exp1().lattice(), DivisorClass{5, 4}), 16);
  EXPECT_THROW(genus(IntersectionLattice::from_rows({{1}}), DivisorClass{2}), Unsupported);
  EXPECT_THROW(genus(IntersectionLattice::from_rows({{1}}, DivisorClass{0}), DivisorClass{1}), InputError);
}

TEST(IntersectionLattice, PairingExamples) {
  auto q = quadric();
  EXPECT_EQ(pair(q, DivisorClass{4, 5}, DivisorClass{1, 1}), 9);
  EXPECT_EQ(pair(q, DivisorClass{0, 0}, DivisorClass{7, -3}), 0);
  EXPECT_EQ(genus(q, DivisorClass{2, 5}), 4);
  EXPECT_EQ(genus(q, DivisorClass{1, 1}), 0);
  const auto e = SurfaceModel::exp1().lattice();
  for (long g = 1; g <= 6; ++g)
    for (long a = 1; a <= 6; ++a) EXPECT_EQ(square(e, DivisorClass{g, a}), 2 * a * g);
}

TEST(IntersectionLattice, PairingIsSymmetricAndBilinear) {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<long> entry(-20, 20);
  auto l = IntersectionLattice::from_rows({{2, 1, 0}, {1, -3, 4}, {0, 4, -1}});
  auto random_class = [&] { return DivisorClass{entry(rng), entry(rng), entry(rng)}; };
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_class(), b = random_class(), c = random_class();
    ASSERT_EQ(pair(l, a, b), pair(l, b, a));
    ASSERT_EQ(pair(l, a + b, c), pair(l, a, c) + pair(l, b, c));
  }
}

TEST(Signature, SmallExamples) {
  auto hyperbolic = validate_signature(quadric());
  EXPECT_TRUE(hyperbolic.hyperbolic);
  EXPECT_EQ(hyperbolic.inertia.positive, 1u);
  EXPECT_EQ(hyperbolic.inertia.negative, 1u);
  EXPECT_EQ(hyperbolic.inertia.zero, 0u);
  auto one = validate_signature(IntersectionLattice::from_rows({{2}}));
  EXPECT_TRUE(one.hyperbolic);
  EXPECT_EQ(one.inertia.positive, 1u);
  auto identity = validate_signature(IntersectionLattice::from_rows({{1, 0}, {0, 1}}));
  EXPECT_FALSE(identity.hyperbolic);
  EXPECT_EQ(identity.inertia.positive, 2u);
  EXPECT_NE(identity.diagnostic.find("(2, 0, 0)"), std::string::npos);
}

TEST(Signature, BuiltInLatticesAreHyperbolic) {
  for (const auto& m : {SurfaceModel::plane(), SurfaceModel::p1xp1(), SurfaceModel::exp1(),
                        SurfaceModel::rank1(5), SurfaceModel::complete_intersection({9, 10})}) {
    auto report = validate_signature(m.lattice());
    EXPECT_TRUE(report.hyperbolic) << m.name() << ": " << report.diagnostic;
  }
}

TEST(Signature, RejectsDefiniteAndDegenerateForms) {
  auto definite = IntersectionLattice::from_rows({{2, 1}, {1, 2}});
  auto report = validate_signature(definite);
  EXPECT_FALSE(report.hyperbolic);
  EXPECT_EQ(report.inertia.positive, 2u);
  EXPECT_THROW(require_hyperbolic(definite), InputError);

  auto degenerate = IntersectionLattice::from_rows({{1, 0}, {0, 0}});
  EXPECT_EQ(inertia(degenerate).zero, 1u);
  EXPECT_FALSE(validate_signature(degenerate).hyperbolic);
}

TEST(Signature, InertiaMatchesCharacteristicPolynomial) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> entry(-6, 6), size(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = static_cast<std::size_t>(size(rng));
    oracle::Mat g(n, oracle::Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = entry(rng);
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : g) rows.push_back(oracle::from_vec(r).coords());
    auto got = inertia(IntersectionLattice(rows));
    auto want = oracle::charpoly_inertia(g);
    ASSERT_EQ(got.positive, want.positive) << "trial " << trial;
    ASSERT_EQ(got.negative, want.negative) << "trial " << trial;
    ASSERT_EQ(got.zero, want.zero) << "trial " << trial;
  }
}

TEST(Signature, HodgeIndexOnRandomAmplePairs) {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<long> coord(1, 1000);
  for (const auto& m : {SurfaceModel::p1xp1(), SurfaceModel::exp1(), SurfaceModel::rank1(7)}) {
    const auto& l = m.lattice();
    for (int trial = 0; trial < 5000; ++trial) {
      std::vector<Integer> a, b;
      for (std::size_t i = 0; i < l.rank(); ++i) {
        a.emplace_back(coord(rng));
        b.emplace_back(coord(rng));
      }
      DivisorClass x(a), y(b);
      Integer xy = pair(l, x, y);
      ASSERT_LE(square(l, x) * square(l, y), xy * xy) << m.name();
    }
  }
}

}  // namespace
}  // namespace lowdeg
