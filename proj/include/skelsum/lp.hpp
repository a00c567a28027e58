#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "skelsum/rational.hpp"

namespace skelsum {

/// maximize c.x subject to A x = b, x >= 0.
/// An empty objective means a pure feasibility program (treated as zero).
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  void add_row(std::vector<Rational> coefficients, Rational value);
  /// Throws std::invalid_argument on inconsistent shapes.
  void validate() const;
};

struct LpOptimal {
  std::vector<Rational> values;
  Rational objective;
};

/// y with y^T A >= 0 componentwise and y^T b < 0. Any x >= 0 would give
/// 0 <= (y^T A) x = y^T b < 0.
struct LpInfeasible {
  std::vector<Rational> farkas;
};

/// d >= 0 with A d = 0 and c.d > 0.
struct LpUnbounded {
  std::vector<Rational> ray;
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Two-phase dense tableau simplex over the rationals with Bland's rule.
/// Every outcome carries a witness; the witness is checked before return and
/// a failed self-check throws std::logic_error.
LpOutcome lp_solve(const LinearProgram& lp);

/// Pure-arithmetic witness checks, independent of the solver.
bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& x);
bool is_farkas_witness(const LinearProgram& lp, const std::vector<Rational>& y);
bool is_improving_ray(const LinearProgram& lp, const std::vector<Rational>& d);

}  // namespace skelsum
