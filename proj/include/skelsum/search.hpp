#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skelsum/barycenter.hpp"
#include "skelsum/errors.hpp"
#include "skelsum/point.hpp"
#include "skelsum/polytope.hpp"

namespace skelsum {

/// Find x_i in faces of dimension <= dims[i] with sum_i weights[i] x_i = target.
struct DecompositionProblem {
  Polytope polytope;
  Point target;
  std::vector<int> dims;
  std::vector<Rational> weights;

  [[nodiscard]] std::size_t size() const { return dims.size(); }
  /// dims[i] clamped to the polytope's intrinsic dimension.
  [[nodiscard]] int search_dim(std::size_t i) const;
};

/// Builds a problem with equal weights 1/n.
DecompositionProblem balanced_problem(Polytope polytope, Point target, std::vector<int> dims);

/// Shape and weight checks (std::invalid_argument), then target membership
/// (PreconditionError).
void validate(const DecompositionProblem& problem);

struct Certificate {
  DecompositionProblem problem;
  std::vector<Face> faces;
  CoefficientMatrix mu;
  std::vector<Point> points;
  bool order_independent = false;
};

struct TupleWitness {
  std::vector<std::size_t> tuple;  // face index per position, into that position's face list
  std::vector<Rational> farkas;
};

struct Refutation {
  std::size_t tuple_count = 0;
  std::vector<TupleWitness> witnesses;
  std::map<int, std::size_t> face_counts;  // searched dimension -> number of faces

  /// FNV-1a over the canonical text of every witness.
  [[nodiscard]] std::string digest() const;
};

using Decomposition = std::variant<Certificate, Refutation>;

struct SearchOptions {
  /// Sequential scan returning the lexicographically first feasible tuple.
  bool deterministic = true;
  /// Worker threads for the non-deterministic mode.
  unsigned jobs = 1;
};

/// Lexicographic odometer over index tuples. Positions sharing a group id
/// must have the same list size and only non-decreasing assignments across
/// them are produced.
class FaceTupleStream {
 public:
  FaceTupleStream(std::vector<std::size_t> list_sizes, std::vector<std::size_t> groups);

  std::optional<std::vector<std::size_t>> next();
  /// Number of tuples the stream yields in total.
  [[nodiscard]] std::size_t count() const;

 private:
  std::size_t lower_bound(std::size_t pos) const;

  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> groups_;
  std::vector<std::optional<std::size_t>> previous_in_group_;
  std::vector<std::size_t> current_;
  bool started_ = false;
  bool exhausted_ = false;
};

struct FaceTuples {
  std::vector<std::vector<Face>> lists;  // per position
  FaceTupleStream stream;
};

/// Face lists of dimension search_dim(i) per position, and the tuple stream
/// with positions of identical (dim, weight) quotiented by symmetry.
FaceTuples enumerate_face_tuples(const DecompositionProblem& problem);

Decomposition decompose(const DecompositionProblem& problem, const SearchOptions& options = {});

/// Arithmetic re-check of a certificate: exact combination, convexity, and
/// face dimension caps.
bool validate_certificate(const Certificate& certificate);

/// Re-enumerates the tuples and checks every Farkas witness by arithmetic.
bool validate_refutation(const DecompositionProblem& problem, const Refutation& refutation);

struct ProbeResult {
  Rational value;
  std::vector<std::size_t> tuple;
  std::vector<Face> faces;
  std::vector<Rational> weights;  // optimal weight vector for the best tuple
  CoefficientMatrix mu;           // rows sum to 1; valid for assemble_fixed with `weights`
  std::vector<Point> points;
  std::size_t tuples_examined = 0;
};

/// Max over all face tuples of the largest feasible weight at probe_index.
/// nullopt when no tuple admits any weight vector.
std::optional<ProbeResult> max_weight_probe(const Polytope& polytope, const Point& target,
                                            const std::vector<int>& dims, std::size_t probe_index);

/// True iff every point lies in some face of dimension <= dims[i] and the
/// weighted combination equals the target.
bool verify_external(const DecompositionProblem& problem, const std::vector<Point>& points);

}  // namespace skelsum
