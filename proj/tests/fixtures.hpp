#pragma once

// Shared polytope and instance generators for the test suites.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "skelsum/polytope.hpp"
#include "skelsum/search.hpp"

namespace fixture {

using skelsum::Point;
using skelsum::Polytope;
using skelsum::Rational;

inline Polytope unit_square() {
  const std::vector<Point> corners{{Rational(0), Rational(0)},
                                   {Rational(1), Rational(0)},
                                   {Rational(0), Rational(1)},
                                   {Rational(1), Rational(1)}};
  return skelsum::canonicalize(corners);
}

inline Polytope random_3_polytope(std::mt19937_64& rng, int points) {
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < points; ++i) {
      pts.push_back(oracle::random_point(rng, 3, 3, 3));
    }
    Polytope p = skelsum::canonicalize(pts);
    if (p.intrinsic_dim() == 3) {
      return p;
    }
  }
}

/// Random strictly interior point: a positive convex combination of all vertices.
inline Point random_interior_point(std::mt19937_64& rng, const Polytope& p) {
  const auto w = oracle::random_convex_weights(rng, p.vertices().size());
  Point x = Point::zero(p.ambient_dim());
  for (std::size_t i = 0; i < w.size(); ++i) {
    x += w[i] * p.vertex(i);
  }
  return x;
}

struct ForwardInstance {
  skelsum::DecompositionProblem problem;
  std::vector<Point> points;
};

/// Picks a face per position, a point in it, and weights; the target is the
/// resulting combination, so the instance is feasible by construction.
inline ForwardInstance forward_instance(std::mt19937_64& rng, const Polytope& p, std::size_t n) {
  std::uniform_int_distribution<int> dim_dist(0, p.intrinsic_dim());
  ForwardInstance out{skelsum::DecompositionProblem{p, Point::zero(p.ambient_dim()), {}, {}}, {}};
  out.problem.weights = oracle::random_convex_weights(rng, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int k = dim_dist(rng);
    const auto faces = skelsum::faces_of_dim(p, k);
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const auto& face = faces[pick(rng)];
    const auto coeffs = oracle::random_convex_weights(rng, face.vertices.size());
    Point x = Point::zero(p.ambient_dim());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      x += coeffs[j] * p.vertex(face.vertices[j]);
    }
    out.problem.dims.push_back(k);
    out.points.push_back(x);
    out.problem.target += out.problem.weights[i] * x;
  }
  return out;
}

}  // namespace fixture
