#include "reference_lp.hpp"

#include <bit>
#include <stdexcept>

namespace skelsum::detail {

namespace {

using Rows = std::vector<std::vector<Rational>>;

// Unique solution on the chosen columns, or nullopt if they are dependent or
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_on(const LinearProgram& lp, const std::vector<std::size_t>& cols) {
  const std::size_t m = lp.rows.size();
  const std::size_t w = cols.size();
  Rows a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (auto j : cols) {
      a[i].push_back(lp.rows[i][j]);
    }
    a[i].push_back(lp.rhs[i]);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < w; ++c, ++r) {
    std::size_t p = r;
    while (p < m && a[p][c].is_zero()) {
      ++p;
    }
    if (p == m) {
      return std::nullopt;
    }
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) {
      v *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && !a[i][c].is_zero()) {
        const Rational f = a[i][c];
        for (std::size_t j = c; j <= w; ++j) {
          a[i][j] -= f * a[r][j];
        }
      }
    }
  }
  for (std::size_t i = r; i < m; ++i) {
    if (!a[i][w].is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<Rational> x(w);
  for (std::size_t i = 0; i < w; ++i) {
    x[i] = a[i][w];
  }
  return x;
}

template <class Visit>
void for_each_basic_feasible(const LinearProgram& lp, Visit visit) {
  const std::size_t n = lp.num_vars;
  if (n >= 20) {
    throw std::invalid_argument("reference_lp: too many variables");
  }
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > lp.rows.size()) {
      continue;
    }
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1u) {
        cols.push_back(j);
      }
    }
    const auto xs = solve_on(lp, cols);
    if (!xs || std::any_of(xs->begin(), xs->end(), [](const Rational& v) { return v.sign() < 0; })) {
      continue;
    }
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      x[cols[k]] = (*xs)[k];
    }
    visit(x);
  }
}

}  // namespace

ReferenceAnswer reference_lp(const LinearProgram& lp) {
  lp.validate();
  std::vector<Rational> c = lp.objective;
  c.resize(lp.num_vars);
  std::optional<Rational> best;
  for_each_basic_feasible(lp, [&](const std::vector<Rational>& x) {
    Rational v;
    for (std::size_t j = 0; j < c.size(); ++j) {
      v += c[j] * x[j];
    }
    if (!best || v > *best) {
      best = v;
    }
  });
  if (!best) {
    return {ReferenceVerdict::infeasible, {}};
  }
  // A feasible program is unbounded iff the recession cone {d >= 0, A d = 0}
  // holds a direction with c.d = 1, and that system has a basic solution.
  LinearProgram rays;
  rays.num_vars = lp.num_vars;
  for (const auto& row : lp.rows) {
    rays.add_row(row, 0);
  }
  rays.add_row(c, 1);
  bool any = false;
  for_each_basic_feasible(rays, [&](const std::vector<Rational>&) { any = true; });
  if (any) {
    return {ReferenceVerdict::unbounded, {}};
  }
  return {ReferenceVerdict::optimal, *best};
}

}  // namespace skelsum::detail
