#include "skelsum/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace skelsum {

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("point dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

Point Point::zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

Point Point::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) {
    throw std::invalid_argument("unit axis out of range");
  }
  Point p = zero(dim);
  p[axis] = 1;
  return p;
}

Point Point::parse(std::span<const std::string> coords) {
  std::vector<Rational> out;
  out.reserve(coords.size());
  for (const auto& c : coords) {
    out.push_back(Rational::parse(c));
  }
  return Point(std::move(out));
}

Point& Point::operator+=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += rhs.coords_[i];
  }
  return *this;
}

Point& Point::operator-=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= rhs.coords_[i];
  }
  return *this;
}

Point& Point::operator*=(const Rational& s) {
  for (auto& c : coords_) {
    c *= s;
  }
  return *this;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                b.coords_.begin(), b.coords_.end());
}

Rational Point::coordinate_sum() const {
  Rational s;
  for (const auto& c : coords_) {
    s += c;
  }
  return s;
}

std::vector<std::string> Point::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    out.push_back(c.str());
  }
  return out;
}

std::string Point::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += coords_[i].str();
  }
  return out + ")";
}

Rational dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

Point concat(const Point& a, const Point& b) {
  std::vector<Rational> out = a.coords();
  out.insert(out.end(), b.coords().begin(), b.coords().end());
  return Point(std::move(out));
}

Point slice(const Point& p, std::size_t first, std::size_t count) {
  if (first + count > p.dim()) {
    throw std::invalid_argument("slice out of range");
  }
  return Point(std::vector<Rational>(p.coords().begin() + static_cast<std::ptrdiff_t>(first),
                                     p.coords().begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Point centroid(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("centroid of empty point list");
  }
  Point sum = Point::zero(points.front().dim());
  for (const auto& p : points) {
    sum += p;
  }
  sum *= Rational(1, static_cast<long>(points.size()));
  return sum;
}

}  // namespace skelsum
