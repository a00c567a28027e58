#include "skelsum/barycenter.hpp"

#include <stdexcept>
#include <string>

namespace skelsum {

BarycenterSystem::BarycenterSystem(const Polytope& p, std::vector<Face> faces,
                                   std::vector<Rational> weights, std::optional<std::size_t> probe,
                                   Point target)
    : faces_(std::move(faces)),
      weights_(std::move(weights)),
      probe_index_(probe),
      target_(std::move(target)) {
  if (faces_.empty()) {
    throw std::invalid_argument("barycenter system needs at least one face");
  }
  if (target_.dim() != p.ambient_dim()) {
    throw std::invalid_argument("target dimension " + std::to_string(target_.dim()) +
                                " differs from ambient dimension " +
                                std::to_string(p.ambient_dim()));
  }
  offsets_.push_back(0);
  for (const auto& f : faces_) {
    if (f.vertices.empty()) {
      throw std::invalid_argument("empty face");
    }
    for (auto v : f.vertices) {
      if (v >= p.num_vertices()) {
        throw std::invalid_argument("face refers to vertex " + std::to_string(v) +
                                    " outside the polytope");
      }
    }
    vertices_.push_back(skelsum::face_vertices(p, f));
    offsets_.push_back(offsets_.back() + f.vertices.size());
  }
}

BarycenterSystem assemble_fixed(const Polytope& polytope, std::vector<Face> faces,
                                std::vector<Rational> weights, Point target) {
  if (faces.size() != weights.size()) {
    throw std::invalid_argument("need one weight per face");
  }
  Rational total;
  for (const auto& w : weights) {
    if (w.sign() < 0) {
      throw std::invalid_argument("negative weight " + w.str());
    }
    total += w;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("weights sum to " + total.str() + ", expected 1");
  }
  return BarycenterSystem(polytope, std::move(faces), std::move(weights), std::nullopt,
                          std::move(target));
}

BarycenterSystem assemble_probe(const Polytope& polytope, std::vector<Face> faces,
                                std::size_t probe_index, Point target) {
  if (probe_index >= faces.size()) {
    throw std::invalid_argument("probe index " + std::to_string(probe_index) + " out of range");
  }
  return BarycenterSystem(polytope, std::move(faces), {}, probe_index, std::move(target));
}

LinearProgram BarycenterSystem::program() const {
  const std::size_t n = size();
  const std::size_t mus = mu_count();
  LinearProgram lp;
  lp.num_vars = is_probe() ? mus + n : mus;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(lp.num_vars);
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) {
      row[j] = 1;
    }
    if (is_probe()) {
      row[mus + i] = -1;
      lp.add_row(std::move(row), 0);
    } else {
      lp.add_row(std::move(row), 1);
    }
  }
  if (is_probe()) {
    std::vector<Rational> row(lp.num_vars);
    for (std::size_t i = 0; i < n; ++i) {
      row[mus + i] = 1;
    }
    lp.add_row(std::move(row), 1);
  }
  for (std::size_t c = 0; c < target_.dim(); ++c) {
    std::vector<Rational> row(lp.num_vars);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < vertices_[i].size(); ++j) {
        const Rational& coord = vertices_[i][j][c];
        if (!coord.is_zero()) {
          row[offsets_[i] + j] = is_probe() ? coord : weights_[i] * coord;
        }
      }
    }
    lp.add_row(std::move(row), target_[c]);
  }
  if (is_probe()) {
    lp.objective.assign(lp.num_vars, Rational());
    lp.objective[mus + *probe_index_] = 1;
  }
  return lp;
}

CoefficientMatrix BarycenterSystem::split(const std::vector<Rational>& values) const {
  if (values.size() < mu_count()) {
    throw std::invalid_argument("solution vector too short");
  }
  CoefficientMatrix mu(size());
  for (std::size_t i = 0; i < size(); ++i) {
    mu[i].assign(values.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                 values.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
  return mu;
}

std::vector<Point> BarycenterSystem::realize(const CoefficientMatrix& mu) const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    Point x = Point::zero(target_.dim());
    for (std::size_t j = 0; j < vertices_[i].size(); ++j) {
      x += mu[i][j] * vertices_[i][j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool check_certificate(const BarycenterSystem& system, const CoefficientMatrix& mu) {
  if (system.is_probe()) {
    throw std::invalid_argument("check_certificate needs a fixed-weight system");
  }
  if (mu.size() != system.size()) {
    throw std::invalid_argument("coefficient matrix has " + std::to_string(mu.size()) +
                                " rows, system has " + std::to_string(system.size()) + " faces");
  }
  const auto& verts = system.face_vertices();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i].size() != verts[i].size()) {
      throw std::invalid_argument("coefficient row " + std::to_string(i) + " has wrong length");
    }
  }
  Point combo = Point::zero(system.target().dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Rational row_sum;
    Point x = Point::zero(system.target().dim());
    for (std::size_t j = 0; j < mu[i].size(); ++j) {
      if (mu[i][j].sign() < 0) {
        return false;
      }
      row_sum += mu[i][j];
      x += mu[i][j] * verts[i][j];
    }
    if (row_sum != Rational(1)) {
      return false;
    }
    combo += system.weights()[i] * x;
  }
  return combo == system.target();
}

}  // namespace skelsum
