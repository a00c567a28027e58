#include "skelsum/lp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace skelsum {

void LinearProgram::add_row(std::vector<Rational> coefficients, Rational value) {
  if (coefficients.size() != num_vars) {
    throw std::invalid_argument("row has " + std::to_string(coefficients.size()) +
                                " coefficients, program has " + std::to_string(num_vars) +
                                " variables");
  }
  rows.push_back(std::move(coefficients));
  rhs.push_back(std::move(value));
}

void LinearProgram::validate() const {
  if (rows.size() != rhs.size()) {
    throw std::invalid_argument("row count and right-hand side length differ");
  }
  for (const auto& r : rows) {
    if (r.size() != num_vars) {
      throw std::invalid_argument("ragged constraint matrix");
    }
  }
  if (!objective.empty() && objective.size() != num_vars) {
    throw std::invalid_argument("objective length differs from variable count");
  }
}

namespace {

// Dense tableau. Columns [0, n) are structural, [n, n + m) artificial, and
// the last column holds the basic solution values.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : n_(lp.num_vars), m_(lp.rows.size()), rhs_col_(n_ + m_), basis_(m_), signs_(m_) {
    cells_.assign(m_, std::vector<Rational>(n_ + m_ + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      signs_[i] = lp.rhs[i].sign() < 0 ? -1 : 1;
      const Rational s(signs_[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!lp.rows[i][j].is_zero()) {
          cells_[i][j] = s * lp.rows[i][j];
        }
      }
      cells_[i][n_ + i] = 1;
      cells_[i][rhs_col_] = s * lp.rhs[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase 1: minimize the sum of artificials. Returns the Farkas vector when
  // the optimum is positive.
  std::optional<std::vector<Rational>> phase_one() {
    std::vector<Rational> cost(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) {
      cost[n_ + i] = 1;
    }
    price(cost, n_ + m_);
    run(n_ + m_);
    if (reduced_[rhs_col_].is_zero()) {
      return std::nullopt;
    }
    // Reduced cost of artificial i is 1 - u_i; y = -D u.
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational u = Rational(1) - reduced_[n_ + i];
      y[i] = signs_[i] > 0 ? -u : u;
    }
    return y;
  }

  void drop_artificials() {
    for (std::size_t r = 0; r < cells_.size();) {
      if (basis_[r] < n_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!cells_[r][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        // Redundant row.
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  // Phase 2 on structural columns only; maximizes `objective`.
  // Returns the entering column if the program is unbounded.
  std::optional<std::size_t> phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> cost(n_ + m_);
    for (std::size_t j = 0; j < n_ && j < objective.size(); ++j) {
      cost[j] = -objective[j];
    }
    price(cost, n_);
    return run(n_);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (basis_[r] < n_) {
        x[basis_[r]] = cells_[r][rhs_col_];
      }
    }
    return x;
  }

  std::vector<Rational> ray(std::size_t entering) const {
    std::vector<Rational> d(n_);
    d[entering] = 1;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (basis_[r] < n_) {
        d[basis_[r]] = -cells_[r][entering];
      }
    }
    return d;
  }

 private:
  void price(const std::vector<Rational>& cost, std::size_t columns) {
    reduced_.assign(n_ + m_ + 1, Rational());
    for (std::size_t j = 0; j < columns; ++j) {
      reduced_[j] = cost[j];
    }
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < columns; ++j) {
        if (!cells_[r][j].is_zero()) {
          reduced_[j] -= cb * cells_[r][j];
        }
      }
      reduced_[rhs_col_] -= cb * cells_[r][rhs_col_];
    }
  }

  // Bland's rule: smallest entering index with negative reduced cost, ratio
  // ties broken by smallest basic variable index.
  std::optional<std::size_t> run(std::size_t columns) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns; ++j) {
        if (reduced_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) {
        return std::nullopt;
      }
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < cells_.size(); ++r) {
        const Rational& a = cells_[r][*entering];
        if (a.sign() <= 0) {
          continue;
        }
        Rational ratio = cells_[r][rhs_col_] / a;
#ifdef SKELSUM_MUTATED_PIVOT
        // Deliberately broken ratio test for the negative-control build.
        const bool better = !leaving || ratio > best;
#else
        const bool better = !leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving]);
#endif
        if (better) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) {
        return entering;
      }
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = cells_[row];
    const Rational inv = Rational(1) / pr[col];
    for (auto& c : pr) {
      if (!c.is_zero()) {
        c *= inv;
      }
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col].is_zero()) {
        return;
      }
      const Rational f = target[col];
      for (std::size_t j = 0; j < pr.size(); ++j) {
        if (!pr[j].is_zero()) {
          target[j] -= f * pr[j];
        }
      }
    };
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r != row) {
        eliminate(cells_[r]);
      }
    }
    if (!reduced_.empty()) {
      eliminate(reduced_);
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t rhs_col_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<int> signs_;
  std::vector<Rational> reduced_;
};

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational v;
  for (std::size_t j = 0; j < lp.objective.size(); ++j) {
    v += lp.objective[j] * x[j];
  }
  return v;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  lp.validate();
  Tableau t(lp);
  if (auto farkas = t.phase_one()) {
    if (!is_farkas_witness(lp, *farkas)) {
      throw std::logic_error("simplex produced an invalid Farkas witness");
    }
    return LpInfeasible{std::move(*farkas)};
  }
  t.drop_artificials();
  if (auto entering = t.phase_two(lp.objective)) {
    auto d = t.ray(*entering);
    if (!is_improving_ray(lp, d)) {
      throw std::logic_error("simplex produced an invalid unbounded ray");
    }
    return LpUnbounded{std::move(d)};
  }
  auto x = t.solution();
  if (!is_feasible_point(lp, x)) {
    throw std::logic_error("simplex produced an infeasible solution");
  }
  Rational value = objective_value(lp, x);
  return LpOptimal{std::move(x), std::move(value)};
}

bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_vars) {
    return false;
  }
  for (const auto& v : x) {
    if (v.sign() < 0) {
      return false;
    }
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      s += lp.rows[i][j] * x[j];
    }
    if (s != lp.rhs[i]) {
      return false;
    }
  }
  return true;
}

bool is_farkas_witness(const LinearProgram& lp, const std::vector<Rational>& y) {
  if (y.size() != lp.rows.size()) {
    return false;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    Rational s;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      s += y[i] * lp.rows[i][j];
    }
    if (s.sign() < 0) {
      return false;
    }
  }
  Rational yb;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    yb += y[i] * lp.rhs[i];
  }
  return yb.sign() < 0;
}

bool is_improving_ray(const LinearProgram& lp, const std::vector<Rational>& d) {
  if (d.size() != lp.num_vars) {
    return false;
  }
  for (const auto& v : d) {
    if (v.sign() < 0) {
      return false;
    }
  }
  for (const auto& row : lp.rows) {
    Rational s;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      s += row[j] * d[j];
    }
    if (!s.is_zero()) {
      return false;
    }
  }
  return objective_value(lp, d).sign() > 0;
}

}  // namespace skelsum
