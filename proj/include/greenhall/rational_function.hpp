#pragma once

#include <iosfwd>
#include <string>

#include "greenhall/laurent.hpp"

namespace greenhall {

// Ratio of Laurent polynomials in canonical form: numerator and denominator
// coprime, denominator a monic polynomial with nonzero constant term (all
// powers of t are carried by the numerator).  The representation of a given
// rational function is unique, so operator== is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly(1)) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(LaurentPoly(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Exact evaluation; throws std::domain_error("pole at ...") at a pole.
  Rational evaluate(const Rational& t0) const;

  // f(1/t) in canonical form.
  RationalFunction substitute_inverse() const;

  std::string str() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace greenhall
