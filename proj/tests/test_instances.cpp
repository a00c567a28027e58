#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skelsum/instances.hpp"

using namespace skelsum;

namespace {

Rational sum(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) {
    s += x;
  }
  return s;
}

// Dimension of the smallest face containing x, found from the rank oracle.
int face_dim_of(const Polytope& p, const Point& x) {
  const auto f = minimal_face(p, x);
  return oracle::affine_rank(face_vertices(p, f));
}

}  // namespace

TEST(VertexHeavyTarget, FormulaValues) {
  EXPECT_EQ(lemma_target(1, 2), (Point{Rational(1, 4), Rational(3, 4)}));
  EXPECT_EQ(lemma_target(2, 3), (Point{Rational(1, 4), Rational(1, 4), Rational(1, 2)}));
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      EXPECT_EQ(lemma_target(d, n).coordinate_sum(), Rational(1)) << d << "," << n;
    }
  }
  EXPECT_THROW(lemma_target(2, 2), std::invalid_argument);
  EXPECT_THROW(lemma_target(0, 2), std::invalid_argument);
}

TEST(VertexHeavyInstance, VertexCappedPositionsAreRefuted) {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}}) {
    const auto problem = lemma_instance(d, n);
    ASSERT_EQ(problem.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(std::count(problem.dims.begin(), problem.dims.end(), 0), n - d + 1);
    const auto out = decompose(problem);
    const auto* ref = std::get_if<Refutation>(&out);
    ASSERT_NE(ref, nullptr) << d << "," << n;
    EXPECT_TRUE(validate_refutation(problem, *ref));
  }
}

TEST(LowFaceInstance, RefutedAndRelaxationSolves) {
  const std::vector<std::tuple<int, int, int, std::size_t>> cases{
      {2, 1, 2, 3}, {3, 1, 3, 4}, {2, 2, 4, 10}};
  for (const auto& [n, k, d, tuples] : cases) {
    const auto problem = propA_instance(n, k, d);
    EXPECT_EQ(problem.dims[0], k - 1);
    const auto out = decompose(problem);
    const auto* ref = std::get_if<Refutation>(&out);
    ASSERT_NE(ref, nullptr);
    EXPECT_EQ(ref->tuple_count, tuples);
    EXPECT_TRUE(validate_refutation(problem, *ref));

    auto relaxed = problem;
    relaxed.dims[0] = k;
    EXPECT_TRUE(std::holds_alternative<Certificate>(decompose(relaxed)));
  }
  EXPECT_THROW(propA_instance(2, 2, 3), std::invalid_argument);
  EXPECT_THROW(propA_instance(1, 1, 3), std::invalid_argument);
}

TEST(SimplexProductInstance, ConstructionAndTightness) {
  const auto problem = propB_instance(2, 1, 1);
  EXPECT_EQ(problem.polytope.intrinsic_dim(), 3);
  EXPECT_EQ(problem.target, (Point{Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 4),
                                   Rational(3, 4)}));
  EXPECT_EQ(problem.dims, (std::vector<int>{1, 1}));
  const auto out = decompose(problem);
  ASSERT_TRUE(std::holds_alternative<Refutation>(out));
  EXPECT_TRUE(validate_refutation(problem, std::get<Refutation>(out)));

  const auto relaxed = propB_relaxed_instance(2, 1, 1);
  EXPECT_EQ(relaxed.dims, (std::vector<int>{1, 2}));
  const auto solved = decompose(relaxed);
  ASSERT_TRUE(std::holds_alternative<Certificate>(solved));
  EXPECT_TRUE(validate_certificate(std::get<Certificate>(solved)));

  const auto big = propB_instance(3, 1, 2);
  EXPECT_EQ(big.polytope.intrinsic_dim(), 5);
  EXPECT_EQ(big.dims, (std::vector<int>{1, 1, 5}));
  EXPECT_EQ(big.target.coordinate_sum(), Rational(2));
  EXPECT_THROW(propB_instance(2, 1, 2), std::invalid_argument);
  EXPECT_THROW(propB_instance(2, 1, 0), std::invalid_argument);
}

TEST(Lift, DimensionsAndTargets) {
  const auto lifted = lift_instance(standard_simplex(3), 2, 1, 1);
  EXPECT_EQ(lifted.s, 1);
  EXPECT_EQ(lifted.polytope.intrinsic_dim(), 4);
  EXPECT_EQ(lifted.simplex_target, (Point{Rational(1, 4), Rational(3, 4)}));
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int r = 1; r < n; ++r) {
        if (n * k + r > 6) {
          continue;
        }
        const auto l = lift_instance(standard_simplex(n * k + r), n, k, r);
        EXPECT_EQ(l.polytope.intrinsic_dim(), n * (k + 1));
        EXPECT_EQ(l.simplex_target.coordinate_sum(), Rational(1));
      }
    }
  }
  const auto identity = lift_instance(standard_simplex(2), 2, 1, 0);
  EXPECT_EQ(identity.polytope.vertices(), standard_simplex(2).vertices());
  EXPECT_EQ(identity.simplex_target.dim(), 0u);
  EXPECT_THROW(lift_instance(standard_simplex(3), 2, 1, 2), std::invalid_argument);
}

TEST(LiftedDecompose, TetrahedronBarycenter) {
  const auto tet = standard_simplex(3);
  const auto cert = lifted_decompose(tet, vertex_barycenter(tet), 2, 1);
  ASSERT_EQ(cert.points.size(), 2u);
  EXPECT_TRUE(validate_certificate(cert));
  // One point in an edge, the other in a 2-face or better.
  EXPECT_EQ(cert.problem.dims[0], 1);
  EXPECT_LE(cert.problem.dims[1], 2);
  EXPECT_LE(face_dim_of(tet, cert.points[0]), 1);
  EXPECT_LE(face_dim_of(tet, cert.points[1]), 2);
  EXPECT_EQ(Rational(1, 2) * (cert.points[0] + cert.points[1]), vertex_barycenter(tet));
}

TEST(LiftedDecompose, RandomThreePolytopes) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = fixture::random_3_polytope(rng, 6);
    const auto target = fixture::random_interior_point(rng, p);
    const auto cert = lifted_decompose(p, target, 2, 1);
    EXPECT_TRUE(validate_certificate(cert));
    const auto problem = balanced_problem(p, target, {1, 2});
    EXPECT_TRUE(verify_external(problem, cert.points));
  }
}

TEST(LiftedDecompose, NoLiftWhenDimensionDivides) {
  const auto tri = standard_simplex(2);
  const auto cert = lifted_decompose(tri, vertex_barycenter(tri), 2, 1);
  EXPECT_EQ(cert.problem.dims, (std::vector<int>{1, 1}));
  EXPECT_TRUE(validate_certificate(cert));
  EXPECT_THROW(lifted_decompose(standard_simplex(4), vertex_barycenter(standard_simplex(4)), 2, 1),
               std::invalid_argument);
}

TEST(WeightFamily, ValuesAndSums) {
  EXPECT_EQ(weight_family(1, 1, 1).entries(),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
  EXPECT_EQ(weight_family(2, 1, 1).entries(),
            (std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 6), Rational(1, 6)}));
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      for (int k = 1; k <= 4; ++k) {
        const auto w = weight_family(s, t, k);
        EXPECT_EQ(w.size(), static_cast<std::size_t>(s * k + t * (k + 1)));
        EXPECT_EQ(sum(w.entries()), Rational(1));
        EXPECT_TRUE(w.is_non_increasing());
      }
    }
  }
  EXPECT_THROW(weight_family(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(WeightVector({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(WeightVector({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
}

TEST(EdgeSplit, SimplexCertificates) {
  const auto tet = standard_simplex(3);
  const auto a = edge_split_certificate(tet, vertex_barycenter(tet), 1, 1, 1);
  EXPECT_EQ(a.problem.weights, weight_family(1, 1, 1).entries());
  EXPECT_EQ(a.problem.dims, (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(validate_certificate(a));
  EXPECT_TRUE(verify_external(a.problem, a.points));

  const auto d4 = standard_simplex(4);
  const auto b = edge_split_certificate(d4, vertex_barycenter(d4), 2, 1, 1);
  EXPECT_EQ(b.points.size(), 4u);
  EXPECT_EQ(b.problem.weights, weight_family(2, 1, 1).entries());
  EXPECT_TRUE(validate_certificate(b));

  EXPECT_THROW(edge_split_certificate(tet, vertex_barycenter(tet), 2, 1, 1), std::invalid_argument);
}

TEST(EdgeSplit, RandomPolytopes) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = fixture::random_3_polytope(rng, 6);
    const auto target = fixture::random_interior_point(rng, p);
    const auto cert = edge_split_certificate(p, target, 1, 1, 1);
    EXPECT_TRUE(validate_certificate(cert));
    for (const auto& x : cert.points) {
      EXPECT_LE(face_dim_of(p, x), 1);
    }
  }
}

TEST(CoeffBound, ValuesAndMonotonicity) {
  EXPECT_EQ(coeff_bound(2, 1), Rational(2, 3));
  EXPECT_EQ(coeff_bound(3, 2), Rational(3, 7));
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const auto gap = coeff_bound(n, k) - Rational(1, n);
      EXPECT_EQ(gap, Rational(n - 1, n * (n * k + 1)));
      if (n > 1) {
        EXPECT_GT(gap, Rational(0));
        EXPECT_LT(coeff_bound(n, k + 1), coeff_bound(n, k));
      }
    }
  }
}

TEST(BoundCertificate, ValidatesWithoutEnumeration) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 5; ++k) {
      const auto c = bound_certificate(n, k);
      EXPECT_EQ(c.bound, coeff_bound(n, k));
      EXPECT_TRUE(c.validate());
    }
  }
  const auto c = bound_certificate(3, 2);
  EXPECT_EQ(c.functional(vertex_barycenter(standard_simplex(6))), Rational(3, 7));
  auto broken = bound_certificate(2, 1);
  broken.functional.coefficients[2] = Rational(1);
  EXPECT_FALSE(broken.validate());
}

TEST(BalancedLimitSchedule, Examples) {
  using Result = std::variant<Balanced, int>;
  EXPECT_EQ(balanced_limit_schedule(WeightVector({Rational(1, 2), Rational(1, 4), Rational(1, 4)})),
            Result(2));
  EXPECT_EQ(balanced_limit_schedule(WeightVector({Rational(2, 3), Rational(1, 3)})), Result(2));
  EXPECT_EQ(balanced_limit_schedule(WeightVector(std::vector<Rational>(3, Rational(1, 3)))),
            Result(Balanced{}));
  EXPECT_EQ(balanced_limit_schedule(WeightVector({Rational(1)})), Result(Balanced{}));
  EXPECT_THROW(balanced_limit_schedule(WeightVector({Rational(1, 3), Rational(2, 3)})),
               std::invalid_argument);
}

// Scanning k directly must agree with the closed form.
TEST(BalancedLimitSchedule, AgreesWithLinearScan) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> len(2, 5);
    auto w = oracle::random_convex_weights(rng, len(rng));
    std::sort(w.begin(), w.end(), std::greater<>());
    const WeightVector weights(w);
    const auto got = balanced_limit_schedule(weights);
    if (weights.is_balanced()) {
      EXPECT_TRUE(std::holds_alternative<Balanced>(got));
      continue;
    }
    const int n = static_cast<int>(w.size());
    int k = 1;
    while (!(w[0] > Rational(k + 1, n * k + 1))) {
      ++k;
    }
    ASSERT_TRUE(std::holds_alternative<int>(got));
    EXPECT_EQ(std::get<int>(got), k);
  }
}

TEST(ScheduleRefutation, SmallestScheduledKIsRefuted) {
  const auto out = schedule_refutation(WeightVector({Rational(2, 3), Rational(1, 3)}));
  ASSERT_TRUE(out.has_value());
  const auto* ref = std::get_if<Refutation>(&*out);
  ASSERT_NE(ref, nullptr);
  EXPECT_EQ(ref->tuple_count, 100u);
  EXPECT_FALSE(schedule_refutation(WeightVector({Rational(1, 2), Rational(1, 2)})).has_value());
  EXPECT_FALSE(
      schedule_refutation(WeightVector({Rational(2, 3), Rational(1, 3)}), 50).has_value());
}
