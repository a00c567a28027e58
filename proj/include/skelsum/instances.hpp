#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "skelsum/polytope.hpp"
#include "skelsum/search.hpp"

namespace skelsum {

/// Nonnegative weights summing to 1.
class WeightVector {
 public:
  /// Throws std::invalid_argument on a negative entry or a sum other than 1.
  explicit WeightVector(std::vector<Rational> entries);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] bool is_non_increasing() const;
  [[nodiscard]] bool is_balanced() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Point of Delta^d whose first d coordinates are (d - 1/2)/(dn) and whose
/// last coordinate is (n - d + 1/2)/n. Requires 1 <= d < n.
/// No n points of Delta^d with n - d + 1 of them vertices average to it.
Point lemma_target(int d, int n);

/// Delta^d with target lemma_target(d, n), n - d + 1 positions capped at
/// dimension 0, the other d - 1 uncapped, equal weights. Always refutable.
DecompositionProblem lemma_instance(int d, int n);

/// Delta^d, barycenter target, dims (k-1, d, ..., d), equal weights 1/n.
/// Requires d >= nk, k >= 1, n >= 2. Always refutable.
DecompositionProblem propA_instance(int n, int k, int d);

/// (Delta^n)^k x Delta^r of dimension d = nk + r, target k copies of the
/// Delta^n barycenter followed by lemma_target(r, n); n - r + 1 positions
/// capped at k and r - 1 uncapped. Requires n >= 2, k >= 1, 1 <= r <= n - 1.
DecompositionProblem propB_instance(int n, int k, int r);

/// propB_instance with its last k-capped position raised to k + 1. Solvable.
DecompositionProblem propB_relaxed_instance(int n, int k, int r);

struct LiftedInstance {
  Polytope polytope;    // P x Delta^s, or P itself when r = 0
  Point simplex_target; // lemma_target(s, n); empty when r = 0
  int s = 0;
};

/// Q = P x Delta^s with s = n - r. Requires dim(P) = nk + r, 0 <= r <= n-1.
LiftedInstance lift_instance(const Polytope& p, int n, int k, int r);

/// n points averaging to target, at least n - r of them in k-faces and the
/// rest in (k+1)-faces, where r = dim(P) - nk. Found by searching
/// (k+1)-faces of the lift and projecting back. The certificate's dims list
/// the k-face points first. Throws InternalError if the search fails.
Certificate lifted_decompose(const Polytope& p, const Point& target, int n, int k,
                             const SearchOptions& options = {});

/// First sk entries 1/((s+t)k), remaining t(k+1) entries 1/((s+t)(k+1)).
WeightVector weight_family(int s, int t, int k);

/// Points on the 1-skeleton of an n-polytope, n = sk + t(k+1), whose
/// combination with weight_family(s, t, k) is the target. Each mixed-face
/// point from lifted_decompose is split into equally weighted edge points
/// inside a face of the right dimension.
Certificate edge_split_certificate(const Polytope& p, const Point& target, int s, int t, int k,
                                   const SearchOptions& options = {});

/// (k+1)/(nk+1).
Rational coeff_bound(int n, int k);

struct BoundCertificateData {
  int n = 0;
  int k = 0;
  Rational bound;
  Face face;                  // conv{e_1..e_{k+1}} in Delta^{nk}
  DualFunctional functional;  // e_1^* + ... + e_{k+1}^*

  /// The functional is 1 on the face's vertices, 0 on every other vertex of
  /// Delta^{nk}, and equals the bound at the barycenter.
  [[nodiscard]] bool validate() const;
};

BoundCertificateData bound_certificate(int n, int k);

struct Balanced {
  friend bool operator==(Balanced, Balanced) { return true; }
};

/// Balanced, or the first k with weights[0] > (k+1)/(nk+1). Equality at the
/// bound does not exclude. Requires a non-increasing vector.
std::variant<Balanced, int> balanced_limit_schedule(const WeightVector& weights);

/// Exhaustive decompose on Delta^{nk} at the barycenter with dims all k for
/// the scheduled k, when at most `max_tuples` tuples are involved.
std::optional<Decomposition> schedule_refutation(const WeightVector& weights,
                                                 std::size_t max_tuples = 10000);

}  // namespace skelsum
