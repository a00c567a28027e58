#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skelsum/lp.hpp"
#include "skelsum/point.hpp"
#include "skelsum/polytope.hpp"

namespace skelsum {

using CoefficientMatrix = std::vector<std::vector<Rational>>;

/// Linear system for "x_i in conv(face_i), sum_i lambda_i x_i = target".
///
/// Variable mu_{ij} is the convex coefficient of vertex j of face i, laid out
/// face by face. With fixed weights the rows are sum_j mu_{ij} = 1 and the
/// coordinate rows sum_{ij} lambda_i mu_{ij} v_{ij} = target. In probe mode
/// the weights become variables lambda_i appended after the mu block, and the
/// substitution mu_{ij} <- lambda_i mu_{ij} keeps everything linear:
/// sum_j mu_{ij} = lambda_i, sum_i lambda_i = 1, sum_{ij} mu_{ij} v_{ij} = target,
/// maximizing lambda_probe.
class BarycenterSystem {
 public:
  [[nodiscard]] std::size_t size() const { return faces_.size(); }
  [[nodiscard]] const std::vector<Face>& faces() const { return faces_; }
  [[nodiscard]] const std::vector<std::vector<Point>>& face_vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }
  [[nodiscard]] const Point& target() const { return target_; }
  [[nodiscard]] bool is_probe() const { return probe_index_.has_value(); }
  [[nodiscard]] std::optional<std::size_t> probe_index() const { return probe_index_; }

  /// Index of mu_{i0} in the LP variable vector.
  [[nodiscard]] std::size_t offset(std::size_t i) const { return offsets_[i]; }
  [[nodiscard]] std::size_t mu_count() const { return offsets_.back(); }

  [[nodiscard]] LinearProgram program() const;

  /// Splits an LP solution into per-face coefficient rows (mu block only).
  [[nodiscard]] CoefficientMatrix split(const std::vector<Rational>& values) const;

  /// x_i = sum_j mu_{ij} v_{ij}.
  [[nodiscard]] std::vector<Point> realize(const CoefficientMatrix& mu) const;

 private:
  BarycenterSystem(const Polytope& p, std::vector<Face> faces, std::vector<Rational> weights,
                   std::optional<std::size_t> probe, Point target);

  friend BarycenterSystem assemble_fixed(const Polytope&, std::vector<Face>, std::vector<Rational>,
                                         Point);
  friend BarycenterSystem assemble_probe(const Polytope&, std::vector<Face>, std::size_t, Point);

  std::vector<Face> faces_;
  std::vector<std::vector<Point>> vertices_;
  std::vector<Rational> weights_;
  std::optional<std::size_t> probe_index_;
  Point target_;
  std::vector<std::size_t> offsets_;
};

/// Weights must be nonnegative and sum to 1 (std::invalid_argument otherwise).
BarycenterSystem assemble_fixed(const Polytope& polytope, std::vector<Face> faces,
                                std::vector<Rational> weights, Point target);

BarycenterSystem assemble_probe(const Polytope& polytope, std::vector<Face> faces,
                                std::size_t probe_index, Point target);

/// Re-checks a fixed-weight solution with plain arithmetic: mu >= 0, each row
/// sums to 1, and the weighted combination hits the target exactly.
/// Throws std::invalid_argument when mu does not match the system's shape.
bool check_certificate(const BarycenterSystem& system, const CoefficientMatrix& mu);

}  // namespace skelsum
