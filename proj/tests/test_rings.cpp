#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "greenhall/json_io.hpp"
#include "greenhall/laurent.hpp"
#include "greenhall/rational.hpp"
#include "greenhall/rational_function.hpp"

using namespace greenhall;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  std::uniform_int_distribution<int> coeff_dist(-4, 4);
  std::uniform_int_distribution<int> terms(0, 4);
  LaurentPoly p;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    p.set_coeff(exp_dist(rng), Rational(coeff_dist(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-1, 2).denominator() == 1 * 2);
  CHECK(Rational::parse("43").str() == "43/1");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("laurent arithmetic examples") {
  LaurentPoly one(1);
  LaurentPoly t = LaurentPoly::t();
  CHECK((one - t) * (one + t) == one - t * t);
  CHECK(LaurentPoly::monomial(Rational(1), -1) * t == one);
  LaurentPoly p = one - t * t;
  CHECK(divide_exact(p, one - t) == one + t);
  CHECK_THROWS(divide_exact(one + t * t, one + t));
}

TEST_CASE("rational function canonical form") {
  LaurentPoly one(1);
  LaurentPoly t = LaurentPoly::t();
  RationalFunction f(one - t * t, one - t);
  CHECK(f.is_polynomial());
  CHECK(f == RationalFunction(one + t));
  // Denominator is normalized monic with nonzero constant term.
  RationalFunction g(one, (t - one) * LaurentPoly(Rational(3)) * t);
  CHECK(g.den().leading_coeff() == Rational(1));
  CHECK(g.den().valuation() == 0);
  CHECK_THROWS(RationalFunction(one, LaurentPoly()));
}

TEST_CASE("evaluation") {
  LaurentPoly t = LaurentPoly::t();
  LaurentPoly p = t * t - t;
  CHECK(p.evaluate(Rational(2)) == Rational(2));
  CHECK(LaurentPoly::monomial(Rational(1), -1).evaluate(Rational(4)) == Rational(1, 4));
  CHECK_THROWS_AS(LaurentPoly::monomial(Rational(1), -1).evaluate(Rational(0)),
                  std::domain_error);
  RationalFunction f(LaurentPoly(1), LaurentPoly(1) - t);
  CHECK(f.evaluate(Rational(2)) == Rational(-1));
  CHECK_THROWS_WITH(f.evaluate(Rational(1)), "pole at t = 1/1");
}

TEST_CASE("reverse_tilde examples and involution") {
  LaurentPoly one(1);
  LaurentPoly t = LaurentPoly::t();
  CHECK(one.reverse_tilde(3) == LaurentPoly::monomial(Rational(1), 3));
  CHECK(t.reverse_tilde(1) == one);
  CHECK((one + t).reverse_tilde(2) == t + t * t);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(p.reverse_tilde(2).reverse_tilde(2) == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng);
    LaurentPoly q = random_poly(rng);
    Rational t0(3, 2);
    CHECK((p * q).evaluate(t0) == p.evaluate(t0) * q.evaluate(t0));
    CHECK((p + q).evaluate(t0) == p.evaluate(t0) + q.evaluate(t0));
  }
}

TEST_CASE("rational function field axioms on random samples") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    RationalFunction a{random_poly(rng)};
    LaurentPoly dp = random_poly(rng);
    if (dp.is_zero()) dp = LaurentPoly(1);
    RationalFunction b(random_poly(rng), dp);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("json round trips") {
  LaurentPoly p;
  p.set_coeff(-1, Rational(1, 4));
  p.set_coeff(2, Rational(-3));
  Json j = to_json(p);
  CHECK(j["-1"] == "1/4");
  CHECK(laurent_from_json(j) == p);

  RationalFunction f(p, LaurentPoly(1) - LaurentPoly::t());
  CHECK(rational_function_from_json(to_json(f)) == f);
}
