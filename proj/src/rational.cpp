#include "greenhall/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace greenhall {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("division by zero");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  v.canonicalize();
  return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

long long Rational::to_long_long() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw std::domain_error("integer overflow: " + str());
  return v_.get_num().get_si();
}

Rational Rational::pow(long exp) const {
  if (exp == 0) return Rational(1);
  if (is_zero()) {
    if (exp < 0) throw std::domain_error("zero base with negative exponent");
    return Rational(0);
  }
  mpz_class num, den;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  mpq_class r(num, den);
  if (exp < 0) r = 1 / r;
  r.canonicalize();
  return Rational(r);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace greenhall
