#include "skelsum/instances.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace skelsum {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

Point simplex_barycenter(int d) {
  const auto n = static_cast<std::size_t>(d) + 1;
  return Point(std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
}

Polytope simplex_power(int n, int k) {
  Polytope p = standard_simplex(n);
  for (int i = 1; i < k; ++i) {
    p = product(p, standard_simplex(n));
  }
  return p;
}

}  // namespace

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), "weight vector must be nonempty");
  Rational total;
  for (const auto& w : entries_) {
    require(w.sign() >= 0, "negative weight " + w.str());
    total += w;
  }
  require(total == Rational(1), "weights sum to " + total.str() + ", expected 1");
}

bool WeightVector::is_non_increasing() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

bool WeightVector::is_balanced() const {
  const Rational even(1, static_cast<long>(entries_.size()));
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Rational& w) { return w == even; });
}

Point lemma_target(int d, int n) {
  require(d >= 1 && d < n, "lemma target needs 1 <= d < n");
  const Rational half(1, 2);
  const Rational lead = (Rational(d) - half) / Rational(d * n);
  std::vector<Rational> coords(static_cast<std::size_t>(d), lead);
  coords.push_back((Rational(n - d) + half) / Rational(n));
  return Point(std::move(coords));
}

DecompositionProblem lemma_instance(int d, int n) {
  Point target = lemma_target(d, n);
  std::vector<int> dims(static_cast<std::size_t>(n - d + 1), 0);
  dims.insert(dims.end(), static_cast<std::size_t>(d - 1), d);
  return balanced_problem(standard_simplex(d), std::move(target), std::move(dims));
}

DecompositionProblem propA_instance(int n, int k, int d) {
  require(n >= 2 && k >= 1, "propA instance needs n >= 2 and k >= 1");
  require(d >= n * k, "propA instance needs d >= nk");
  std::vector<int> dims{k - 1};
  dims.insert(dims.end(), static_cast<std::size_t>(n - 1), d);
  return balanced_problem(standard_simplex(d), simplex_barycenter(d), std::move(dims));
}

DecompositionProblem propB_instance(int n, int k, int r) {
  require(n >= 2 && k >= 1, "propB instance needs n >= 2 and k >= 1");
  require(r >= 1 && r <= n - 1, "propB instance needs 1 <= r <= n - 1");
  const int d = n * k + r;
  Polytope p = product(simplex_power(n, k), standard_simplex(r));
  Point target;
  for (int i = 0; i < k; ++i) {
    target = concat(target, simplex_barycenter(n));
  }
  target = concat(target, lemma_target(r, n));
  std::vector<int> dims(static_cast<std::size_t>(n - r + 1), k);
  dims.insert(dims.end(), static_cast<std::size_t>(r - 1), d);
  return balanced_problem(std::move(p), std::move(target), std::move(dims));
}

DecompositionProblem propB_relaxed_instance(int n, int k, int r) {
  auto problem = propB_instance(n, k, r);
  problem.dims[static_cast<std::size_t>(n - r)] = k + 1;
  return problem;
}

LiftedInstance lift_instance(const Polytope& p, int n, int k, int r) {
  require(n >= 2 && k >= 0, "lift needs n >= 2 and k >= 0");
  require(r >= 0 && r <= n - 1, "lift needs 0 <= r <= n - 1");
  require(p.intrinsic_dim() == n * k + r, "polytope dimension " +
                                              std::to_string(p.intrinsic_dim()) + " != nk + r = " +
                                              std::to_string(n * k + r));
  if (r == 0) {
    return LiftedInstance{p, Point(), 0};
  }
  const int s = n - r;
  return LiftedInstance{product(p, standard_simplex(s)), lemma_target(s, n), s};
}

Certificate lifted_decompose(const Polytope& p, const Point& target, int n, int k,
                             const SearchOptions& options) {
  require(n >= 2 && k >= 0, "lifted decomposition needs n >= 2 and k >= 0");
  const int r = p.intrinsic_dim() - n * k;
  require(r >= 0 && r <= n - 1, "polytope dimension " + std::to_string(p.intrinsic_dim()) +
                                    " is not nk + r with 0 <= r < n");
  if (!contains(p, target)) {
    throw PreconditionError("target " + target.str() + " lies outside the polytope");
  }

  if (r == 0) {
    auto result = decompose(balanced_problem(p, target, std::vector<int>(n, k)), options);
    if (auto* cert = std::get_if<Certificate>(&result)) {
      return std::move(*cert);
    }
    throw InternalError("no k-skeleton decomposition found on an nk-polytope");
  }

  const auto lifted = lift_instance(p, n, k, r);
  auto result = decompose(balanced_problem(lifted.polytope, concat(target, lifted.simplex_target),
                                           std::vector<int>(n, k + 1)),
                          options);
  auto* lifted_cert = std::get_if<Certificate>(&result);
  if (lifted_cert == nullptr) {
    throw InternalError("no (k+1)-skeleton decomposition found on the lifted polytope");
  }

  struct Projected {
    Point x;
    Face face;
  };
  std::vector<Projected> projected;
  for (const auto& y : lifted_cert->points) {
    Point x = slice(y, 0, p.ambient_dim());
    Face face = minimal_face(p, x);
    projected.push_back(Projected{std::move(x), std::move(face)});
  }
  std::stable_partition(projected.begin(), projected.end(),
                        [k](const Projected& a) { return a.face.dim <= k; });
  const auto low = static_cast<int>(std::count_if(
      projected.begin(), projected.end(), [k](const Projected& a) { return a.face.dim <= k; }));
  if (low < n - r) {
    throw InternalError("only " + std::to_string(low) + " projected points lie in k-faces");
  }

  std::vector<int> dims(static_cast<std::size_t>(low), k);
  dims.resize(static_cast<std::size_t>(n), k + 1);
  Certificate cert{balanced_problem(p, target, std::move(dims)), {}, {}, {},
                   lifted_cert->order_independent};
  for (auto& item : projected) {
    auto mu = convex_coefficients(face_vertices(p, item.face), item.x);
    if (!mu) {
      throw InternalError("projected point is not in its minimal face");
    }
    cert.faces.push_back(std::move(item.face));
    cert.mu.push_back(std::move(*mu));
    cert.points.push_back(std::move(item.x));
  }
  if (!validate_certificate(cert)) {
    throw InternalError("projected certificate failed validation");
  }
  return cert;
}

WeightVector weight_family(int s, int t, int k) {
  require(s >= 1 && t >= 1 && k >= 1, "weight family needs positive s, t, k");
  std::vector<Rational> entries(static_cast<std::size_t>(s * k), Rational(1, (s + t) * k));
  entries.insert(entries.end(), static_cast<std::size_t>(t * (k + 1)),
                 Rational(1, (s + t) * (k + 1)));
  return WeightVector(std::move(entries));
}

Certificate edge_split_certificate(const Polytope& p, const Point& target, int s, int t, int k,
                                   const SearchOptions& options) {
  require(s >= 1 && t >= 1 && k >= 1, "edge split needs positive s, t, k");
  const int n = s * k + t * (k + 1);
  require(p.intrinsic_dim() == n, "edge split needs a polytope of dimension sk + t(k+1) = " +
                                      std::to_string(n));

  const auto mixed = lifted_decompose(p, target, s + t, k, options);
  const WeightVector weights = weight_family(s, t, k);

  std::map<int, std::vector<Face>> faces_by_dim;
  auto faces = [&](int dim) -> const std::vector<Face>& {
    auto it = faces_by_dim.find(dim);
    if (it == faces_by_dim.end()) {
      it = faces_by_dim.emplace(dim, faces_of_dim(p, dim)).first;
    }
    return it->second;
  };

  Certificate cert{DecompositionProblem{p, target, std::vector<int>(weights.size(), 1),
                                        weights.entries()},
                   {}, {}, {}, mixed.order_independent};

  for (std::size_t i = 0; i < mixed.points.size(); ++i) {
    // The first s points go to k-faces, the remaining t to (k+1)-faces.
    const int face_dim = static_cast<int>(i) < s ? k : k + 1;
    const auto& minimal = mixed.faces[i];
    const Face* host = nullptr;
    for (const auto& f : faces(face_dim)) {
      if (std::includes(f.vertices.begin(), f.vertices.end(), minimal.vertices.begin(),
                        minimal.vertices.end())) {
        host = &f;
        break;
      }
    }
    if (host == nullptr) {
      throw InternalError("no " + std::to_string(face_dim) + "-face contains a mixed point");
    }
    const Polytope sub = canonicalize(face_vertices(p, *host));
    auto split = decompose(balanced_problem(sub, mixed.points[i],
                                            std::vector<int>(static_cast<std::size_t>(face_dim), 1)),
                           options);
    auto* part = std::get_if<Certificate>(&split);
    if (part == nullptr) {
      throw InternalError("edge split failed inside a " + std::to_string(face_dim) + "-face");
    }
    for (std::size_t j = 0; j < part->faces.size(); ++j) {
      std::vector<std::pair<std::size_t, Rational>> mapped;
      for (std::size_t v = 0; v < part->faces[j].vertices.size(); ++v) {
        auto index = p.find_vertex(sub.vertex(part->faces[j].vertices[v]));
        if (!index) {
          throw InternalError("sub-face vertex missing from the polytope");
        }
        mapped.emplace_back(*index, part->mu[j][v]);
      }
      std::sort(mapped.begin(), mapped.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      Face edge{{}, part->faces[j].dim};
      std::vector<Rational> mu;
      for (auto& [index, coefficient] : mapped) {
        edge.vertices.push_back(index);
        mu.push_back(std::move(coefficient));
      }
      cert.faces.push_back(std::move(edge));
      cert.mu.push_back(std::move(mu));
      cert.points.push_back(part->points[j]);
    }
  }
  if (!validate_certificate(cert)) {
    throw InternalError("edge-split certificate failed validation");
  }
  return cert;
}

Rational coeff_bound(int n, int k) {
  require(n >= 1 && k >= 1, "coefficient bound needs n, k >= 1");
  return Rational(k + 1, n * k + 1);
}

BoundCertificateData bound_certificate(int n, int k) {
  require(n >= 2 && k >= 1, "bound certificate needs n >= 2 and k >= 1");
  const int d = n * k;
  BoundCertificateData data;
  data.n = n;
  data.k = k;
  data.bound = coeff_bound(n, k);
  data.face.dim = k;
  for (int i = 0; i <= k; ++i) {
    data.face.vertices.push_back(static_cast<std::size_t>(i));
  }
  data.functional.coefficients.assign(static_cast<std::size_t>(d + 1), Rational());
  for (int i = 0; i <= k; ++i) {
    data.functional.coefficients[static_cast<std::size_t>(i)] = 1;
  }
  return data;
}

bool BoundCertificateData::validate() const {
  const int d = n * k;
  const auto vertices = static_cast<std::size_t>(d + 1);
  if (functional.coefficients.size() != vertices || face.vertices.size() != static_cast<std::size_t>(k + 1)) {
    return false;
  }
  std::vector<bool> on_face(vertices, false);
  for (auto v : face.vertices) {
    if (v >= vertices) {
      return false;
    }
    on_face[v] = true;
  }
  for (std::size_t v = 0; v < vertices; ++v) {
    const Rational value = functional(Point::unit(vertices, v));
    if (value != Rational(on_face[v] ? 1 : 0)) {
      return false;
    }
  }
  return functional(simplex_barycenter(d)) == bound && bound == coeff_bound(n, k);
}

std::variant<Balanced, int> balanced_limit_schedule(const WeightVector& weights) {
  require(weights.is_non_increasing(), "schedule needs a non-increasing weight vector");
  if (weights.is_balanced()) {
    return Balanced{};
  }
  const auto n = static_cast<long>(weights.size());
  const Rational& top = weights[0];
  // top > (k+1)/(nk+1)  <=>  k (n top - 1) > 1 - top, and n top > 1 here.
  const Rational threshold = (Rational(1) - top) / (Rational(n) * top - Rational(1));
  const mpz_class k = floor(threshold) + 1;
  return std::max(1, static_cast<int>(k.get_si()));
}

std::optional<Decomposition> schedule_refutation(const WeightVector& weights,
                                                 std::size_t max_tuples) {
  const auto schedule = balanced_limit_schedule(weights);
  if (std::holds_alternative<Balanced>(schedule)) {
    return std::nullopt;
  }
  const int k = std::get<int>(schedule);
  const int d = static_cast<int>(weights.size()) * k;
  DecompositionProblem problem{standard_simplex(d), simplex_barycenter(d),
                               std::vector<int>(weights.size(), k), weights.entries()};
  if (enumerate_face_tuples(problem).stream.count() > max_tuples) {
    return std::nullopt;
  }
  return decompose(problem);
}

}  // namespace skelsum
