#include "skelsum/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "double_description.hpp"
#include "linalg.hpp"
#include "skelsum/lp.hpp"

namespace skelsum {

Rational DualFunctional::operator()(const Point& p) const {
  if (p.dim() != coefficients.size()) {
    throw std::invalid_argument("functional/point dimension mismatch");
  }
  Rational s = offset;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) {
      s += coefficients[i] * p[i];
    }
  }
  return s;
}

Polytope::Polytope(std::size_t ambient_dim, std::vector<Point> vertices, std::vector<Facet> facets,
                   int intrinsic_dim)
    : ambient_dim_(ambient_dim),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)),
      intrinsic_dim_(intrinsic_dim) {}

std::vector<std::vector<std::size_t>> Polytope::facet_incidence() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    out.push_back(f.vertices);
  }
  return out;
}

std::optional<std::size_t> Polytope::find_vertex(const Point& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p, std::greater<>());
  if (it == vertices_.end() || *it != p) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

Polytope standard_simplex(int d) {
  if (d < 0) {
    throw std::invalid_argument("simplex dimension must be >= 0, got " + std::to_string(d));
  }
  const auto n = static_cast<std::size_t>(d) + 1;
  std::vector<Point> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back(Point::unit(n, i));
  }
  std::vector<Facet> facets;
  if (d >= 1) {
    // Facet opposite vertex `skip` is {x_skip = 0}.
    for (std::size_t skip = n; skip-- > 0;) {
      Facet f;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != skip) {
          f.vertices.push_back(i);
        }
      }
      f.inequality.coefficients.assign(n, Rational());
      f.inequality.coefficients[skip] = 1;
      facets.push_back(std::move(f));
    }
  }
  return Polytope(n, std::move(vertices), std::move(facets), d);
}

Polytope product(const Polytope& p, const Polytope& q) {
  const std::size_t nq = q.num_vertices();
  std::vector<Point> vertices;
  vertices.reserve(p.num_vertices() * nq);
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      vertices.push_back(concat(a, b));
    }
  }
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    Facet g;
    for (auto i : f.vertices) {
      for (std::size_t j = 0; j < nq; ++j) {
        g.vertices.push_back(i * nq + j);
      }
    }
    g.inequality.coefficients = f.inequality.coefficients;
    g.inequality.coefficients.resize(p.ambient_dim() + q.ambient_dim());
    g.inequality.offset = f.inequality.offset;
    facets.push_back(std::move(g));
  }
  for (const auto& f : q.facets()) {
    Facet g;
    for (std::size_t i = 0; i < p.num_vertices(); ++i) {
      for (auto j : f.vertices) {
        g.vertices.push_back(i * nq + j);
      }
    }
    g.inequality.coefficients.assign(p.ambient_dim(), Rational());
    g.inequality.coefficients.insert(g.inequality.coefficients.end(),
                                     f.inequality.coefficients.begin(),
                                     f.inequality.coefficients.end());
    g.inequality.offset = f.inequality.offset;
    facets.push_back(std::move(g));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return Polytope(p.ambient_dim() + q.ambient_dim(), std::move(vertices), std::move(facets),
                  p.intrinsic_dim() + q.intrinsic_dim());
}

Polytope canonicalize(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("canonicalize: empty point list");
  }
  const std::size_t ambient = points.front().dim();
  for (const auto& p : points) {
    if (p.dim() != ambient) {
      throw std::invalid_argument("canonicalize: mixed ambient dimensions");
    }
  }
  std::vector<Point> unique(points.begin(), points.end());
  std::sort(unique.begin(), unique.end(), std::greater<>());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<Point> extreme;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<Point> others;
    others.reserve(unique.size() - 1);
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j != i) {
        others.push_back(unique[j]);
      }
    }
    if (others.empty() || !convex_coefficients(others, unique[i])) {
      extreme.push_back(unique[i]);
    }
  }

  const int dim = affine_dimension(extreme);
  auto facets = detail::enumerate_facets(extreme, dim);
  return Polytope(ambient, std::move(extreme), std::move(facets), dim);
}

std::optional<std::vector<Rational>> convex_coefficients(std::span<const Point> points,
                                                         const Point& x) {
  if (points.empty()) {
    return std::nullopt;
  }
  for (const auto& p : points) {
    if (p.dim() != x.dim()) {
      throw std::invalid_argument("convex_coefficients: dimension mismatch");
    }
  }
  LinearProgram lp;
  lp.num_vars = points.size();
  for (std::size_t c = 0; c < x.dim(); ++c) {
    std::vector<Rational> row(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
      row[j] = points[j][c];
    }
    lp.add_row(std::move(row), x[c]);
  }
  lp.add_row(std::vector<Rational>(points.size(), Rational(1)), 1);
  auto outcome = lp_solve(lp);
  if (auto* opt = std::get_if<LpOptimal>(&outcome)) {
    return std::move(opt->values);
  }
  return std::nullopt;
}

bool contains(const Polytope& p, const Point& x) {
  if (x.dim() != p.ambient_dim()) {
    throw std::invalid_argument("contains: point has dimension " + std::to_string(x.dim()) +
                                ", polytope lives in " + std::to_string(p.ambient_dim()));
  }
  return convex_coefficients(p.vertices(), x).has_value();
}

Face minimal_face(const Polytope& p, const Point& x) {
  if (!contains(p, x)) {
    throw std::invalid_argument("minimal_face: point " + x.str() + " is not in the polytope");
  }
  std::vector<bool> in(p.num_vertices(), true);
  for (const auto& f : p.facets()) {
    if (!f.inequality(x).is_zero()) {
      continue;
    }
    std::vector<bool> mask(p.num_vertices(), false);
    for (auto v : f.vertices) {
      mask[v] = true;
    }
    for (std::size_t v = 0; v < in.size(); ++v) {
      in[v] = in[v] && mask[v];
    }
  }
  Face face;
  for (std::size_t v = 0; v < in.size(); ++v) {
    if (in[v]) {
      face.vertices.push_back(v);
    }
  }
  face.dim = affine_dimension(face_vertices(p, face));
  return face;
}

bool is_face(const Polytope& p, const std::vector<std::size_t>& vertices) {
  if (vertices.empty() || !std::is_sorted(vertices.begin(), vertices.end()) ||
      vertices.back() >= p.num_vertices()) {
    return false;
  }
  std::vector<bool> closure(p.num_vertices(), true);
  for (const auto& f : p.facets()) {
    if (!std::includes(f.vertices.begin(), f.vertices.end(), vertices.begin(), vertices.end())) {
      continue;
    }
    std::vector<bool> mask(p.num_vertices(), false);
    for (auto v : f.vertices) {
      mask[v] = true;
    }
    for (std::size_t v = 0; v < closure.size(); ++v) {
      closure[v] = closure[v] && mask[v];
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < closure.size(); ++v) {
    if (closure[v]) {
      out.push_back(v);
    }
  }
  return out == vertices;
}

int affine_dimension(std::span<const Point> points) {
  if (points.empty()) {
    return -1;
  }
  detail::Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.push_back((points[i] - points[0]).coords());
  }
  return static_cast<int>(detail::rank(std::move(diffs)));
}

std::vector<Point> face_vertices(const Polytope& p, const Face& f) {
  std::vector<Point> out;
  out.reserve(f.vertices.size());
  for (auto i : f.vertices) {
    out.push_back(p.vertex(i));
  }
  return out;
}

Point vertex_barycenter(const Polytope& p) { return centroid(p.vertices()); }

namespace {

Point circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational den = Rational(1) + t2;
  return Point{(Rational(1) - t2) / den, Rational(2) * t / den};
}

Rational approximate(double value, long scale) {
  return Rational(std::lround(value * static_cast<double>(scale)), scale);
}

}  // namespace

Polytope rational_circle_polygon(int m, bool symmetric) {
  if (m < 3) {
    throw std::invalid_argument("polygon needs at least 3 vertices");
  }
  if (symmetric && m % 2 != 0) {
    throw std::invalid_argument("centrally symmetric polygon needs an even vertex count");
  }
  const double pi = std::numbers::pi;
  for (long scale = 64;; scale *= 2) {
    std::vector<Point> points;
    if (symmetric) {
      const int half = m / 2;
      for (int j = 0; j < half; ++j) {
        const double theta = pi * j / half;
        Point p = circle_point(approximate(std::tan(theta / 2), scale));
        points.push_back(Rational(-1) * p);
        points.push_back(std::move(p));
      }
    } else {
      for (int j = 0; j < m; ++j) {
        if (2 * j == m) {
          points.push_back(Point{Rational(-1), Rational(0)});
          continue;
        }
        const double theta = 2 * pi * j / m;
        points.push_back(circle_point(approximate(std::tan(theta / 2), scale)));
      }
    }
    std::set<Point> distinct(points.begin(), points.end());
    if (distinct.size() == points.size()) {
      return canonicalize(points);
    }
  }
}

}  // namespace skelsum
