#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "greenhall/rational.hpp"

namespace greenhall {

// Sparse Laurent polynomial in one variable t with exact rational
// coefficients.  Zero coefficients are never stored, so two equal
// polynomials have identical coefficient maps.
class LaurentPoly {
 public:
  using Map = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_[0] = c;
  }
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, std::int64_t exp);
  // The variable t itself.
  static LaurentPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // Lowest exponent with nonzero coefficient; throws on the zero polynomial.
  std::int64_t valuation() const;
  // Highest exponent with nonzero coefficient; throws on the zero polynomial.
  std::int64_t degree() const;
  const Rational& leading_coeff() const;
  Rational coeff(std::int64_t exp) const;
  const Map& coeffs() const { return coeffs_; }

  void set_coeff(std::int64_t exp, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

  // Multiplies by t^shift.
  LaurentPoly shifted(std::int64_t shift) const;
  // t^shift * p(1/t).
  LaurentPoly reverse_tilde(std::int64_t shift) const;

  // Exact evaluation.  t0 = 0 with negative exponents present throws.
  Rational evaluate(const Rational& t0) const;

  // True if every coefficient is an integer.
  bool has_integer_coeffs() const;
  // True if all exponents are >= 0.
  bool is_polynomial() const;

  // Human-readable form like "t^2 - 3/2*t + 1".
  std::string str() const;

 private:
  Map coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Quotient of exact division; throws std::domain_error if the division has a
// remainder or the divisor is zero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Monic gcd of the t-power-free parts; gcd of anything with 0 is the other
// argument made monic.  Used for canonicalizing rational functions.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace greenhall
