#include "greenhall/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenhall {

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t exp) {
  LaurentPoly p;
  if (!c.is_zero()) p.coeffs_[exp] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == Rational(1);
}

std::int64_t LaurentPoly::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero polynomial");
  return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.rbegin()->second;
}

Rational LaurentPoly::coeff(std::int64_t exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(std::int64_t exp, const Rational& c) {
  if (c.is_zero()) {
    coeffs_.erase(exp);
  } else {
    coeffs_[exp] = c;
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) {
    auto it = r.coeffs_.find(e);
    if (it == r.coeffs_.end()) {
      r.coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      auto it = r.coeffs_.find(e1 + e2);
      if (it == r.coeffs_.end()) {
        Rational c = c1 * c2;
        if (!c.is_zero()) r.coeffs_[e1 + e2] = c;
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + shift] = c;
  return r;
}

LaurentPoly LaurentPoly::reverse_tilde(std::int64_t shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[shift - e] = c;
  return r;
}

Rational LaurentPoly::evaluate(const Rational& t0) const {
  if (is_zero()) return Rational(0);
  if (t0.is_zero() && valuation() < 0) {
    throw std::domain_error("zero base with negative exponent");
  }
  Rational acc(0);
  for (const auto& [e, c] : coeffs_) acc += c * t0.pow(e);
  return acc;
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& [e, c] : coeffs_) {
    (void)e;
    if (!c.is_integer()) return false;
  }
  return true;
}

bool LaurentPoly::is_polynomial() const { return is_zero() || valuation() >= 0; }

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool unit_coeff = (a == Rational(1));
    if (e == 0) {
      os << (a.is_integer() ? a.numerator().get_str() : a.str());
    } else {
      if (!unit_coeff) {
        os << (a.is_integer() ? a.numerator().get_str() : a.str()) << "*";
      }
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return LaurentPoly();
  // Shift both to honest polynomials, divide, shift back.
  std::int64_t vn = num.valuation(), vd = den.valuation();
  LaurentPoly n = num.shifted(-vn), d = den.shifted(-vd);
  LaurentPoly q;
  while (!n.is_zero() && n.degree() >= d.degree()) {
    Rational c = n.leading_coeff() / d.leading_coeff();
    std::int64_t e = n.degree() - d.degree();
    LaurentPoly term = LaurentPoly::monomial(c, e);
    q += term;
    n -= term * d;
  }
  if (!n.is_zero()) throw std::domain_error("inexact polynomial division");
  return q.shifted(vn - vd);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto make_monic = [](LaurentPoly p) {
    if (p.is_zero()) return p;
    p = p.shifted(-p.valuation());
    Rational lc = p.leading_coeff();
    LaurentPoly inv = LaurentPoly(Rational(1) / lc);
    return p * inv;
  };
  LaurentPoly x = make_monic(a);
  LaurentPoly y = make_monic(b);
  while (!y.is_zero()) {
    // Remainder of x by y (both monic honest polynomials).
    LaurentPoly r = x;
    while (!r.is_zero() && r.degree() >= y.degree()) {
      Rational c = r.leading_coeff() / y.leading_coeff();
      r -= LaurentPoly::monomial(c, r.degree() - y.degree()) * y;
    }
    x = y;
    y = make_monic(r);
  }
  return x;
}

}  // namespace greenhall
