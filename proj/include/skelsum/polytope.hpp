#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skelsum/point.hpp"
#include "skelsum/rational.hpp"

namespace skelsum {

/// Affine functional x -> coefficients . x + offset.
struct DualFunctional {
  std::vector<Rational> coefficients;
  Rational offset;

  Rational operator()(const Point& p) const;
};

/// A face of a polytope: sorted indices into the parent's vertex list plus
/// the affine dimension of those vertices.
struct Face {
  std::vector<std::size_t> vertices;
  int dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Facet vertex set together with a supporting inequality that is zero on
/// the facet's vertices and strictly positive on every other vertex.
struct Facet {
  std::vector<std::size_t> vertices;
  DualFunctional inequality;
};

/// Convex hull of finitely many rational points, stored by its extreme
/// vertices (sorted descending lexicographically) and facets (sorted by
/// vertex set). Immutable; built by the factory functions below.
class Polytope {
 public:
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] int intrinsic_dim() const { return intrinsic_dim_; }
  [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
  [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }
  [[nodiscard]] const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }
  [[nodiscard]] std::vector<std::vector<std::size_t>> facet_incidence() const;

  /// Index of a vertex with exactly these coordinates.
  [[nodiscard]] std::optional<std::size_t> find_vertex(const Point& p) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope(std::size_t ambient_dim, std::vector<Point> vertices, std::vector<Facet> facets,
           int intrinsic_dim);

  friend Polytope standard_simplex(int d);
  friend Polytope product(const Polytope& p, const Polytope& q);
  friend Polytope canonicalize(std::span<const Point> points);

  std::size_t ambient_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  int intrinsic_dim_ = 0;
};

/// Delta^d embedded in R^{d+1} as the convex hull of e_1..e_{d+1}.
/// Vertex i is e_{i+1}.
Polytope standard_simplex(int d);

/// Cartesian product. Vertex (i, j) gets index i * q.num_vertices() + j and
/// facets come from the combinatorial product rule, with no numeric hull.
Polytope product(const Polytope& p, const Polytope& q);

/// Convex hull of a point list: drops duplicates and non-extreme points by
/// exact LP membership and enumerates facets by double description.
Polytope canonicalize(std::span<const Point> points);

/// Every face of affine dimension exactly k, sorted by vertex set.
std::vector<Face> faces_of_dim(const Polytope& p, int k);

/// Exact LP membership test.
bool contains(const Polytope& p, const Point& x);

/// Convex coefficients expressing x over the given points, if any.
std::optional<std::vector<Rational>> convex_coefficients(std::span<const Point> points,
                                                         const Point& x);

/// The smallest face containing x, from the facets tight at x.
/// x must lie in p (std::invalid_argument otherwise).
Face minimal_face(const Polytope& p, const Point& x);

/// True iff the sorted vertex set equals the intersection of all facets
/// containing it (the full vertex set when no facet does).
bool is_face(const Polytope& p, const std::vector<std::size_t>& vertices);

/// Affine dimension of a point set (-1 when empty).
int affine_dimension(std::span<const Point> points);

std::vector<Point> face_vertices(const Polytope& p, const Face& f);

/// Vertex average.
Point vertex_barycenter(const Polytope& p);

/// m rational points on the unit circle from the tangent-half-angle map
/// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); antipodal pairs when symmetric.
Polytope rational_circle_polygon(int m, bool symmetric);

}  // namespace skelsum
