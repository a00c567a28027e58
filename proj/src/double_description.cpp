// Incremental double description on the homogenized cone
// { a in Q^{d+1} : a . (1, y_i) >= 0 for all i }, whose extreme rays are the
// facet inequalities of the polytope in intrinsic coordinates y_i.

#include "double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>

#include "linalg.hpp"

namespace skelsum::detail {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  std::vector<Rational> a;
  Bits zeros;  // processed constraints tight at this ray
};

Rational eval(const std::vector<Rational>& h, const std::vector<Rational>& a) {
  Rational s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i].is_zero() && !a[i].is_zero()) {
      s += h[i] * a[i];
    }
  }
  return s;
}

bool adjacent(const std::vector<Ray>& rays, std::size_t r1, std::size_t r2, int dim) {
  const Bits common = rays[r1].zeros & rays[r2].zeros;
  if (static_cast<int>(common.count()) < dim - 1) {
    return false;
  }
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (r != r1 && r != r2 && common.is_subset_of(rays[r].zeros)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Facet> enumerate_facets(const std::vector<Point>& vertices, int dim) {
  if (dim <= 0) {
    return {};
  }
  const std::size_t n = vertices.size();
  const std::size_t ambient = vertices.front().dim();

  Matrix diffs;
  for (std::size_t i = 1; i < n; ++i) {
    diffs.push_back((vertices[i] - vertices[0]).coords());
  }
  const auto coords = row_echelon(diffs).pivot_cols;
  if (static_cast<int>(coords.size()) != dim) {
    throw std::logic_error("double description: dimension mismatch");
  }

  Matrix homogenized(n);
  for (std::size_t i = 0; i < n; ++i) {
    homogenized[i].reserve(coords.size() + 1);
    homogenized[i].emplace_back(1);
    for (auto c : coords) {
      homogenized[i].push_back(vertices[i][c]);
    }
  }

  const auto start = independent_rows(homogenized);
  const std::size_t width = coords.size() + 1;
  if (start.size() != width) {
    throw std::logic_error("double description: no affine basis");
  }

  Matrix basis;
  for (auto i : start) {
    basis.push_back(homogenized[i]);
  }
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<Rational> e(width);
    e[j] = 1;
    auto r = solve_square(basis, e);
    if (!r) {
      throw std::logic_error("double description: singular start basis");
    }
    make_primitive(*r);
    Ray ray{std::move(*r), Bits(n)};
    for (std::size_t i = 0; i < width; ++i) {
      if (i != j) {
        ray.zeros.set(start[i]);
      }
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(n, false);
  for (auto i : start) {
    done[i] = true;
  }

  for (std::size_t t = 0; t < n; ++t) {
    if (done[t]) {
      continue;
    }
    std::vector<Rational> values;
    values.reserve(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values.push_back(eval(homogenized[t], rays[r].a));
      if (values.back().sign() > 0) {
        pos.push_back(r);
      } else if (values.back().sign() < 0) {
        neg.push_back(r);
      }
    }

    std::vector<Ray> next;
    for (auto p : pos) {
      for (auto q : neg) {
        if (!adjacent(rays, p, q, dim)) {
          continue;
        }
        std::vector<Rational> a(width);
        for (std::size_t k = 0; k < width; ++k) {
          a[k] = values[p] * rays[q].a[k] - values[q] * rays[p].a[k];
        }
        make_primitive(a);
        Bits zeros = rays[p].zeros & rays[q].zeros;
        zeros.set(t);
        next.push_back(Ray{std::move(a), std::move(zeros)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const int s = values[r].sign();
      if (s < 0) {
        continue;
      }
      if (s == 0) {
        rays[r].zeros.set(t);
      }
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
    done[t] = true;
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (const auto& ray : rays) {
    Facet f;
    f.inequality.offset = ray.a[0];
    f.inequality.coefficients.assign(ambient, Rational());
    for (std::size_t k = 0; k < coords.size(); ++k) {
      f.inequality.coefficients[coords[k]] = ray.a[k + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int s = f.inequality(vertices[i]).sign();
      if (s < 0) {
        throw std::logic_error("double description: vertex violates facet inequality");
      }
      if (s == 0) {
        f.vertices.push_back(i);
      }
    }
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return facets;
}

}  // namespace skelsum::detail
