#pragma once

// Brute-force LP by enumerating basic solutions. Exponential; only for
// cross-checking the simplex on tiny programs.

#include <optional>

#include "skelsum/lp.hpp"

namespace skelsum::detail {

enum class ReferenceVerdict { optimal, infeasible, unbounded };

struct ReferenceAnswer {
  ReferenceVerdict verdict;
  Rational value;  // optimum when verdict is optimal
};

ReferenceAnswer reference_lp(const LinearProgram& lp);

}  // namespace skelsum::detail
