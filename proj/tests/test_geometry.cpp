#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skelsum/polytope.hpp"

using namespace skelsum;

namespace {

using fixture::random_3_polytope;
using fixture::unit_square;

std::vector<Polytope> small_pool() {
  return {standard_simplex(1), standard_simplex(2), standard_simplex(3), unit_square()};
}

}  // namespace

TEST(StandardSimplex, DegenerateAndSmallCases) {
  const auto point = standard_simplex(0);
  EXPECT_EQ(point.ambient_dim(), 1u);
  EXPECT_EQ(point.intrinsic_dim(), 0);
  ASSERT_EQ(point.num_vertices(), 1u);
  EXPECT_EQ(point.vertex(0), Point{Rational(1)});

  const auto tri = standard_simplex(2);
  EXPECT_EQ(tri.ambient_dim(), 3u);
  ASSERT_EQ(tri.num_vertices(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(tri.vertex(i), Point::unit(3, i));
  }
  EXPECT_EQ(tri.facets().size(), 3u);
  for (const auto& f : tri.facets()) {
    EXPECT_EQ(f.vertices.size(), 2u);
  }
  EXPECT_EQ(faces_of_dim(standard_simplex(4), 2).size(), 10u);
  EXPECT_THROW(standard_simplex(-1), std::invalid_argument);
}

TEST(StandardSimplex, FaceCountsMatchBinomials) {
  for (int d = 0; d <= 6; ++d) {
    const auto s = standard_simplex(d);
    for (int k = 0; k <= d; ++k) {
      EXPECT_EQ(faces_of_dim(s, k).size(), oracle::binomial(d + 1, k + 1)) << d << " " << k;
    }
  }
}

TEST(Product, SmallExamples) {
  const auto square = product(standard_simplex(1), standard_simplex(1));
  EXPECT_EQ(square.num_vertices(), 4u);
  EXPECT_EQ(square.intrinsic_dim(), 2);
  EXPECT_EQ(faces_of_dim(square, 1).size(), 4u);

  const auto prism = product(standard_simplex(2), standard_simplex(1));
  EXPECT_EQ(prism.num_vertices(), 6u);
  EXPECT_EQ(prism.intrinsic_dim(), 3);
  EXPECT_EQ(prism.ambient_dim(), 5u);

  const auto q = product(standard_simplex(3), standard_simplex(1));
  EXPECT_EQ(faces_of_dim(q, 1).size(), 16u);
  EXPECT_EQ(faces_of_dim(q, 2).size(), 14u);
}

TEST(Product, VertexOrderIsLexicographic) {
  const auto q = product(standard_simplex(2), standard_simplex(2));
  for (std::size_t i = 1; i < q.num_vertices(); ++i) {
    EXPECT_GT(q.vertex(i - 1), q.vertex(i));
  }
}

TEST(Product, FaceLatticeIsProductOfLattices) {
  const auto pool = small_pool();
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      const auto pq = product(p, q);
      for (int k = 0; k <= pq.intrinsic_dim(); ++k) {
        std::size_t expected = 0;
        for (int j = 0; j <= k; ++j) {
          if (j <= p.intrinsic_dim() && k - j <= q.intrinsic_dim()) {
            expected += faces_of_dim(p, j).size() * faces_of_dim(q, k - j).size();
          }
        }
        EXPECT_EQ(faces_of_dim(pq, k).size(), expected);
      }
    }
  }
}

TEST(Product, AgreesWithNumericHull) {
  const auto pool = small_pool();
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      const auto combinatorial = product(p, q);
      const auto numeric = canonicalize(combinatorial.vertices());
      EXPECT_EQ(numeric.vertices(), combinatorial.vertices());
      EXPECT_EQ(numeric.facet_incidence(), combinatorial.facet_incidence());
    }
  }
}

TEST(Canonicalize, DropsInteriorAndDuplicatePoints) {
  const std::vector<Point> seg{{Rational(0)}, {Rational(1)}, {Rational(1, 2)}, {Rational(1)}};
  const auto s = canonicalize(seg);
  ASSERT_EQ(s.num_vertices(), 2u);
  EXPECT_EQ(s.intrinsic_dim(), 1);
  EXPECT_EQ(s.facets().size(), 2u);

  std::vector<Point> square{{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(0), Rational(1)},
                            {Rational(1), Rational(1)},
                            {Rational(1, 2), Rational(1, 2)}};
  const auto sq = canonicalize(square);
  EXPECT_EQ(sq.num_vertices(), 4u);
  EXPECT_EQ(sq.facets().size(), 4u);
  EXPECT_THROW(canonicalize(std::vector<Point>{}), std::invalid_argument);
  const std::vector<Point> mixed{{Rational(0)}, {Rational(0), Rational(1)}};
  EXPECT_THROW(canonicalize(mixed), std::invalid_argument);
}

TEST(Canonicalize, MatchesBruteForceExtremeSet) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 20; ++i) {
      pts.push_back(oracle::random_point(rng, 3, 1, 4));
    }
    std::set<Point> expected;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (oracle::is_extreme(pts, i)) {
        expected.insert(pts[i]);
      }
    }
    const auto p = canonicalize(pts);
    EXPECT_EQ(std::set<Point>(p.vertices().begin(), p.vertices().end()), expected);
  }
}

TEST(Canonicalize, IsIdempotent) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_3_polytope(rng, 14);
    const auto again = canonicalize(p.vertices());
    EXPECT_EQ(again.vertices(), p.vertices());
    EXPECT_EQ(again.facet_incidence(), p.facet_incidence());
  }
}

TEST(Canonicalize, FacetsMatchBruteForceOn3Polytopes) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = random_3_polytope(rng, 16);
    const auto expected = oracle::brute_force_facets_3d(p.vertices());
    const auto got = p.facet_incidence();
    EXPECT_EQ(std::set<std::vector<std::size_t>>(got.begin(), got.end()), expected);
    // Euler: V - E + F = 2.
    const auto v = faces_of_dim(p, 0).size();
    const auto e = faces_of_dim(p, 1).size();
    const auto f = faces_of_dim(p, 2).size();
    EXPECT_EQ(static_cast<long>(v) - static_cast<long>(e) + static_cast<long>(f), 2);
    EXPECT_EQ(v, p.num_vertices());
  }
}

TEST(Canonicalize, FacetInequalitiesSupportTheirFacets) {
  std::mt19937_64 rng(5);
  const auto p = random_3_polytope(rng, 12);
  for (const auto& f : p.facets()) {
    std::set<std::size_t> on(f.vertices.begin(), f.vertices.end());
    for (std::size_t v = 0; v < p.num_vertices(); ++v) {
      const int s = f.inequality(p.vertex(v)).sign();
      EXPECT_EQ(s == 0, on.count(v) == 1);
      EXPECT_GE(s, 0);
    }
    EXPECT_EQ(oracle::affine_rank(face_vertices(p, Face{f.vertices, 2})), 2);
  }
}

TEST(Canonicalize, EmbeddedLowerDimensionalInput) {
  // A triangle living in a plane of R^4.
  const std::vector<Point> pts{{Rational(1), Rational(0), Rational(0), Rational(2)},
                               {Rational(0), Rational(1), Rational(0), Rational(2)},
                               {Rational(0), Rational(0), Rational(1), Rational(2)},
                               {Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(2)}};
  const auto p = canonicalize(pts);
  EXPECT_EQ(p.ambient_dim(), 4u);
  EXPECT_EQ(p.intrinsic_dim(), 2);
  EXPECT_EQ(p.num_vertices(), 3u);
  EXPECT_EQ(p.facets().size(), 3u);
  EXPECT_EQ(faces_of_dim(p, 1).size(), 3u);
}

TEST(Faces, DimensionsAgreeWithRankOracle) {
  std::mt19937_64 rng(11);
  std::vector<Polytope> pool = small_pool();
  pool.push_back(product(standard_simplex(3), standard_simplex(1)));
  pool.push_back(random_3_polytope(rng, 12));
  for (const auto& p : pool) {
    for (int k = 0; k <= p.intrinsic_dim(); ++k) {
      const auto faces = faces_of_dim(p, k);
      EXPECT_TRUE(std::is_sorted(faces.begin(), faces.end()));
      EXPECT_EQ(std::set<Face>(faces.begin(), faces.end()).size(), faces.size());
      for (const auto& f : faces) {
        EXPECT_EQ(f.dim, k);
        EXPECT_EQ(oracle::affine_rank(face_vertices(p, f)), k);
        EXPECT_TRUE(is_face(p, f.vertices));
      }
    }
  }
}

TEST(Faces, LowerFacesAreCoveredByHigherOnes) {
  std::mt19937_64 rng(12);
  std::vector<Polytope> pool = small_pool();
  pool.push_back(product(standard_simplex(2), standard_simplex(2)));
  pool.push_back(random_3_polytope(rng, 10));
  for (const auto& p : pool) {
    for (int k = 1; k <= p.intrinsic_dim(); ++k) {
      const auto upper = faces_of_dim(p, k);
      for (int j = 0; j < k; ++j) {
        for (const auto& f : faces_of_dim(p, j)) {
          const bool covered = std::any_of(upper.begin(), upper.end(), [&](const Face& g) {
            return std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(),
                                 f.vertices.end());
          });
          EXPECT_TRUE(covered);
        }
      }
    }
  }
}

TEST(Faces, SquareEdgesAndRangeErrors) {
  const auto sq = unit_square();
  EXPECT_EQ(faces_of_dim(sq, 1).size(), 4u);
  EXPECT_EQ(faces_of_dim(sq, 2).size(), 1u);
  EXPECT_THROW(faces_of_dim(sq, 3), std::invalid_argument);
  EXPECT_THROW(faces_of_dim(sq, -1), std::invalid_argument);
}

TEST(Contains, Examples) {
  const auto tri = standard_simplex(2);
  EXPECT_TRUE(contains(tri, Point{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  EXPECT_FALSE(contains(tri, Point{Rational(1), Rational(1), Rational(-1)}));
  EXPECT_TRUE(contains(standard_simplex(1), Point{Rational(1, 4), Rational(3, 4)}));
  EXPECT_THROW(contains(tri, Point{Rational(1)}), std::invalid_argument);
  // Off the affine hull.
  EXPECT_FALSE(contains(tri, Point{Rational(1, 3), Rational(1, 3), Rational(1, 2)}));
}

TEST(MinimalFace, FindsSmallestContainingFace) {
  const auto tri = standard_simplex(2);
  EXPECT_EQ(minimal_face(tri, Point{Rational(1), Rational(0), Rational(0)}).vertices,
            (std::vector<std::size_t>{0}));
  const auto edge = minimal_face(tri, Point{Rational(1, 2), Rational(0), Rational(1, 2)});
  EXPECT_EQ(edge.vertices, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(edge.dim, 1);
  EXPECT_EQ(minimal_face(tri, Point{Rational(1, 3), Rational(1, 3), Rational(1, 3)}).dim, 2);
  EXPECT_THROW(minimal_face(tri, Point{Rational(2), Rational(0), Rational(-1)}),
               std::invalid_argument);
}

TEST(CirclePolygon, SymmetricSquareAndOctagon) {
  const auto four = rational_circle_polygon(4, true);
  const std::set<Point> expected{{Rational(1), Rational(0)},
                                 {Rational(-1), Rational(0)},
                                 {Rational(0), Rational(1)},
                                 {Rational(0), Rational(-1)}};
  EXPECT_EQ(std::set<Point>(four.vertices().begin(), four.vertices().end()), expected);

  for (int m : {4, 6, 8, 12}) {
    const auto poly = rational_circle_polygon(m, true);
    EXPECT_EQ(poly.num_vertices(), static_cast<std::size_t>(m));
    EXPECT_EQ(poly.intrinsic_dim(), 2);
    for (const auto& v : poly.vertices()) {
      EXPECT_EQ(dot(v, v), Rational(1));
      EXPECT_TRUE(poly.find_vertex(Rational(-1) * v).has_value());
    }
    // Origin interior: no facet inequality is tight there.
    const Point origin = Point::zero(2);
    for (const auto& f : poly.facets()) {
      EXPECT_GT(f.inequality(origin).sign(), 0);
    }
  }
}

TEST(CirclePolygon, AsymmetricAndErrors) {
  for (int m : {3, 5, 7, 8}) {
    const auto poly = rational_circle_polygon(m, false);
    EXPECT_EQ(poly.num_vertices(), static_cast<std::size_t>(m));
    for (const auto& v : poly.vertices()) {
      EXPECT_EQ(dot(v, v), Rational(1));
    }
    EXPECT_EQ(minimal_face(poly, Point::zero(2)).dim, 2);
  }
  EXPECT_THROW(rational_circle_polygon(2, false), std::invalid_argument);
  EXPECT_THROW(rational_circle_polygon(5, true), std::invalid_argument);
}
