#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenhall/kostka.hpp"

using namespace greenhall;

TEST_CASE("charge on the anchor words") {
  CHECK(charge({1}) == 0);
  CHECK(charge({1, 2}) == 0);
  CHECK(charge({2, 1}) == 1);
  CHECK(charge({2, 1, 1, 2}) == 1);
  CHECK(charge({}) == 0);
  // Single-row reading word of weight mu has charge n(mu).
  CHECK(charge({3, 2, 1}) == 3);
  CHECK(charge({2, 1, 1}) == 1);
  CHECK_THROWS_WITH(charge({2, 2, 1}), "non-partition content");
  CHECK_THROWS(charge({2}));
}

TEST_CASE("ssyt enumeration") {
  auto ts = enumerate_ssyt(Partition{2, 1}, Partition{1, 1, 1});
  REQUIRE(ts.size() == 2);
  for (const auto& t : ts) {
    CHECK(t.is_semistandard());
    CHECK(t.shape() == Partition{2, 1});
    CHECK(t.weight() == Partition{1, 1, 1});
  }
  CHECK(enumerate_ssyt(Partition{1, 1}, Partition{2}).empty());
  CHECK(enumerate_ssyt(Partition{}, Partition{}).size() == 1);
}

TEST_CASE("kostka_foulkes examples") {
  CHECK(kostka_foulkes(Partition{2}, Partition{1, 1}) == LaurentPoly::t());
  CHECK(kostka_foulkes(Partition{3, 1}, Partition{3, 1}) == LaurentPoly(1));
  LaurentPoly k = kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1});
  CHECK(k == LaurentPoly::t() + LaurentPoly::t() * LaurentPoly::t());
  // Incomparable or mismatched weights give zero.
  CHECK(kostka_foulkes(Partition{1, 1}, Partition{2}).is_zero());
  CHECK(kostka_foulkes(Partition{2}, Partition{2, 1}).is_zero());
}

TEST_CASE("kostka polynomial shape: monic, degree, non-negative integer coefficients") {
  for (int n = 1; n <= 8; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& lam : ps) {
      for (const auto& mu : ps) {
        LaurentPoly k = kostka_foulkes(lam, mu);
        if (!dominance_leq(mu, lam)) {
          CHECK(k.is_zero());
          continue;
        }
        REQUIRE_FALSE(k.is_zero());
        CHECK(k.degree() == n_stat(mu) - n_stat(lam));
        CHECK(k.leading_coeff() == Rational(1));
        CHECK(k.valuation() >= 0);
        for (const auto& [e, c] : k.coeffs()) {
          CHECK(c.is_integer());
          CHECK(c.sign() > 0);
        }
        // Value at 1 counts the tableaux.
        CHECK(k.evaluate(Rational(1)) ==
              Rational(static_cast<long>(enumerate_ssyt(lam, mu).size())));
      }
    }
  }
}

TEST_CASE("kostka_tilde examples") {
  // lambda = mu = (m1+m2, m2) gives t^{m2}.
  for (int m1 = 0; m1 <= 3; ++m1) {
    for (int m2 = 0; m2 <= 3; ++m2) {
      Partition lam{m1 + m2, m2};
      CHECK(kostka_tilde(lam, lam) == LaurentPoly::monomial(Rational(1), m2));
    }
  }
  CHECK(kostka_tilde(Partition{2}, Partition{1, 1}) == LaurentPoly(1));
  CHECK(kostka_tilde(Partition{3}, Partition{2, 1}) == LaurentPoly(1));
}

TEST_CASE("kostka_tilde valuation is n(lambda)") {
  for (int n = 1; n <= 7; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& lam : ps) {
      for (const auto& mu : ps) {
        if (!dominance_leq(mu, lam)) continue;
        LaurentPoly kt = kostka_tilde(lam, mu);
        CHECK(kt.valuation() == n_stat(lam));
        CHECK(kt.degree() <= n_stat(mu));
      }
    }
  }
}

TEST_CASE("length-2 closed form") {
  for (int n = 1; n <= 10; ++n) {
    auto ps = enumerate_partitions(n, 2);
    for (const auto& lam : ps) {
      for (const auto& mu : ps) {
        if (!dominance_leq(mu, lam)) continue;
        CHECK(kostka_foulkes(lam, mu) ==
              LaurentPoly::monomial(Rational(1), lam.part(1) - mu.part(1)));
      }
    }
  }
}
