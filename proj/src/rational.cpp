#include "skelsum/rational.hpp"

#include <ostream>
#include <regex>
#include <stdexcept>

namespace skelsum {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  static const std::regex kPattern(R"(^([+-]?[0-9]+)(/([0-9]+))?$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kPattern)) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  std::string num = m[1].str();
  if (num.front() == '+') {
    num.erase(0, 1);
  }
  mpz_class n(num, 10);
  mpz_class d(1);
  if (m[3].matched) {
    d = mpz_class(m[3].str(), 10);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in '" + s + "'");
    }
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return q_.get_str(10); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  q_ /= rhs.q_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

mpz_class floor(const Rational& x) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace skelsum
