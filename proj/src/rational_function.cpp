#include "greenhall/rational_function.hpp"

#include <ostream>
#include <stdexcept>

namespace greenhall {

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move all t-powers of the denominator onto the numerator.
  std::int64_t vd = den_.valuation();
  den_ = den_.shifted(-vd);
  num_ = num_.shifted(-vd);
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    std::int64_t vn = num_.valuation();
    num_ = divide_exact(num_.shifted(-vn), g).shifted(vn);
    den_ = divide_exact(den_, g);
  }
  Rational lc = den_.leading_coeff();
  if (lc != Rational(1)) {
    LaurentPoly inv = LaurentPoly(Rational(1) / lc);
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational RationalFunction::evaluate(const Rational& t0) const {
  Rational d = den_.evaluate(t0);
  if (d.is_zero()) throw std::domain_error("pole at t = " + t0.str());
  return num_.evaluate(t0) / d;
}

RationalFunction RationalFunction::substitute_inverse() const {
  // p(1/t) = t^{-deg} * reverse(p) for each part; the constructor restores
  // canonical form.
  if (is_zero()) return RationalFunction();
  LaurentPoly n = num_.reverse_tilde(0);
  LaurentPoly d = den_.reverse_tilde(0);
  return RationalFunction(n, d);
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

}  // namespace greenhall
