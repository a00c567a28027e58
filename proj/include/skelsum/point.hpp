#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "skelsum/rational.hpp"

namespace skelsum {

/// A point (or vector) with exact rational coordinates. Arithmetic between
/// points of different ambient dimension throws std::invalid_argument.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(std::size_t dim);
  static Point unit(std::size_t dim, std::size_t axis);
  /// Parses each entry with Rational::parse.
  static Point parse(std::span<const std::string> coords);

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  Point& operator+=(const Point& rhs);
  Point& operator-=(const Point& rhs);
  Point& operator*=(const Rational& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rational& s, Point a) { return a *= s; }

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  [[nodiscard]] Rational coordinate_sum() const;
  [[nodiscard]] std::vector<std::string> to_strings() const;
  [[nodiscard]] std::string str() const;

 private:
  std::vector<Rational> coords_;
};

Rational dot(const Point& a, const Point& b);
Point concat(const Point& a, const Point& b);
/// Coordinates [first, first + count).
Point slice(const Point& p, std::size_t first, std::size_t count);
/// Arithmetic mean of a nonempty list of points.
Point centroid(std::span<const Point> points);

}  // namespace skelsum
