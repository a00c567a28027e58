#include "linalg.hpp"

#include <utility>

namespace skelsum::detail {

Echelon row_echelon(Matrix rows) {
  Echelon out;
  if (rows.empty()) {
    return out;
  }
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& v : rows[r]) {
      v *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) {
        continue;
      }
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] -= f * rows[r][j];
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.reduced = std::move(rows);
  return out;
}

std::vector<std::size_t> independent_rows(const Matrix& rows) {
  std::vector<std::size_t> picked;
  // Each kept row is reduced so its pivot column is zero in all later kept rows.
  Matrix basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto v = rows[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[pivots[b]];
      if (f.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] -= f * basis[b][j];
      }
    }
    std::size_t c = 0;
    while (c < v.size() && v[c].is_zero()) {
      ++c;
    }
    if (c == v.size()) {
      continue;
    }
    const Rational inv = Rational(1) / v[c];
    for (auto& x : v) {
      x *= inv;
    }
    for (auto& row : basis) {
      const Rational f = row[c];
      if (f.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < v.size(); ++j) {
        row[j] -= f * v[j];
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(c);
    picked.push_back(i);
  }
  return picked;
}

std::size_t rank(Matrix rows) { return row_echelon(std::move(rows)).pivot_cols.size(); }

std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].push_back(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) {
      ++p;
    }
    if (p == n) {
      return std::nullopt;
    }
    std::swap(m[c], m[p]);
    const Rational inv = Rational(1) / m[c][c];
    for (auto& v : m[c]) {
      v *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) {
        continue;
      }
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) {
        m[i][j] -= f * m[c][j];
      }
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = m[i][n];
  }
  return x;
}

void make_primitive(std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_class d = x.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) {
    return;
  }
  const Rational scale{mpq_class(l, g)};
  for (auto& x : v) {
    x *= scale;
  }
}

}  // namespace skelsum::detail
