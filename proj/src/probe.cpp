#include <map>
#include <stdexcept>

#include "skelsum/search.hpp"

namespace skelsum {

std::optional<ProbeResult> max_weight_probe(const Polytope& polytope, const Point& target,
                                            const std::vector<int>& dims,
                                            std::size_t probe_index) {
  if (probe_index >= dims.size()) {
    throw std::invalid_argument("probe index " + std::to_string(probe_index) + " out of range");
  }
  if (!contains(polytope, target)) {
    throw PreconditionError("target " + target.str() + " lies outside the polytope");
  }
  std::map<int, std::vector<Face>> by_dim;
  std::vector<const std::vector<Face>*> lists;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> groups;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) {
      throw std::invalid_argument("negative face dimension");
    }
    const int k = std::min(dims[i], polytope.intrinsic_dim());
    auto it = by_dim.find(k);
    if (it == by_dim.end()) {
      it = by_dim.emplace(k, faces_of_dim(polytope, k)).first;
    }
    lists.push_back(&it->second);
    sizes.push_back(it->second.size());
    // Free weights make same-dimension positions interchangeable, except the probe.
    groups.push_back(i == probe_index ? dims.size() : static_cast<std::size_t>(k));
  }

  FaceTupleStream stream(std::move(sizes), std::move(groups));
  std::optional<ProbeResult> best;
  std::size_t examined = 0;
  while (auto tuple = stream.next()) {
    ++examined;
    std::vector<Face> faces;
    for (std::size_t i = 0; i < tuple->size(); ++i) {
      faces.push_back((*lists[i])[(*tuple)[i]]);
    }
    const auto system = assemble_probe(polytope, faces, probe_index, target);
    auto outcome = lp_solve(system.program());
    auto* opt = std::get_if<LpOptimal>(&outcome);
    if (opt == nullptr) {
      continue;
    }
    if (best && !(opt->objective > best->value)) {
      continue;
    }
    ProbeResult r;
    r.value = opt->objective;
    r.tuple = *tuple;
    r.faces = faces;
    const std::size_t mus = system.mu_count();
    r.weights.assign(opt->values.begin() + static_cast<std::ptrdiff_t>(mus), opt->values.end());
    r.mu = system.split(opt->values);
    // Undo the lambda scaling; a zero-weight point may sit anywhere on its face.
    for (std::size_t i = 0; i < r.mu.size(); ++i) {
      if (r.weights[i].is_zero()) {
        for (auto& m : r.mu[i]) {
          m = Rational();
        }
        r.mu[i][0] = 1;
      } else {
        for (auto& m : r.mu[i]) {
          m /= r.weights[i];
        }
      }
    }
    r.points = system.realize(r.mu);
    best = std::move(r);
  }
  if (best) {
    best->tuples_examined = examined;
  }
  return best;
}

bool verify_external(const DecompositionProblem& problem, const std::vector<Point>& points) {
  if (points.size() != problem.size() || problem.weights.size() != problem.size()) {
    throw std::invalid_argument("expected " + std::to_string(problem.size()) + " points");
  }
  for (const auto& x : points) {
    if (x.dim() != problem.polytope.ambient_dim()) {
      throw std::invalid_argument("point dimension differs from the polytope's ambient dimension");
    }
  }
  Point combo = Point::zero(problem.polytope.ambient_dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    combo += problem.weights[i] * points[i];
  }
  if (combo != problem.target) {
    return false;
  }
  std::map<int, std::vector<Face>> by_dim;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (problem.dims[i] < 0) {
      return false;
    }
    const int k = problem.search_dim(i);
    auto it = by_dim.find(k);
    if (it == by_dim.end()) {
      it = by_dim.emplace(k, faces_of_dim(problem.polytope, k)).first;
    }
    bool found = false;
    for (const auto& f : it->second) {
      if (convex_coefficients(face_vertices(problem.polytope, f), points[i])) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

}  // namespace skelsum
