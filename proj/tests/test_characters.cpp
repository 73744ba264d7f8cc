#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenhall/characters.hpp"

using namespace greenhall;

namespace {

// Independent oracle: hook length formula for dim chi^lambda.
long long hook_dimension(const Partition& lam) {
  int n = lam.weight();
  if (n == 0) return 1;
  Partition conj = lam.conjugate();
  long long num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  long long hooks = 1;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      hooks *= (lam.part(i) - j) + (conj.part(j) - i) + 1;
    }
  }
  return num / hooks;
}

RationalFunction rf(long v) { return RationalFunction(Rational(v)); }

}  // namespace

TEST_CASE("character values: small anchors") {
  // Trivial representation.
  for (const auto& cls : enumerate_partitions(4)) {
    CHECK(character_value(Partition{4}, cls) == 1);
  }
  // Sign of S_2.
  CHECK(character_value(Partition{1, 1}, Partition{1, 1}) == 1);
  CHECK(character_value(Partition{1, 1}, Partition{2}) == -1);
  // Standard of S_3.
  CHECK(character_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(character_value(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
}

TEST_CASE("dimension matches the hook length formula") {
  for (int n = 0; n <= 6; ++n) {
    Partition ones(std::vector<int>(n, 1));
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(character_value(lam, ones) == hook_dimension(lam));
    }
  }
}

TEST_CASE("column orthogonality at the identity class of S_4") {
  long long total = 0;
  for (const auto& lam : enumerate_partitions(4)) {
    long long d = character_value(lam, Partition{1, 1, 1, 1});
    total += d * d;
  }
  CHECK(total == 24);
}

TEST_CASE("z_factor examples") {
  LaurentPoly one(1);
  LaurentPoly t = LaurentPoly::t();
  CHECK(z_factor(Partition{1}) == RationalFunction(one, one - t));
  CHECK(z_factor(Partition{2}) == RationalFunction(LaurentPoly(2), one - t * t));
  CHECK(z_factor(Partition{1, 1}) ==
        RationalFunction(LaurentPoly(2), (one - t) * (one - t)));
}

TEST_CASE("inner products") {
  ClassFunction f = irreducible_character(Partition{1});
  LaurentPoly one(1);
  CHECK(inner_product_t(f, f) == RationalFunction(one - LaurentPoly::t()));

  ClassFunction a = irreducible_character(Partition{2});
  ClassFunction b = irreducible_character(Partition{1, 1});
  CHECK(inner_product_t(a, b).evaluate(Rational(0)) == Rational(0));
  CHECK(inner_product_t(a, a).evaluate(Rational(0)) == Rational(1));
  CHECK_THROWS(inner_product_t(a, f));
}

TEST_CASE("character orthogonality at t = 0") {
  for (int n = 1; n <= 5; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& lam : ps) {
      ClassFunction cl = irreducible_character(lam);
      for (const auto& mu : ps) {
        Rational ip = inner_product_t(cl, irreducible_character(mu)).evaluate(Rational(0));
        CHECK(ip == (lam == mu ? Rational(1) : Rational(0)));
      }
    }
  }
}

TEST_CASE("pair inner product") {
  PairClassFunction ones(1, 1);
  ones.set(Partition{1}, Partition{1}, rf(1));
  LaurentPoly one(1);
  LaurentPoly t = LaurentPoly::t();
  CHECK(pair_inner_product_t(ones, ones) == RationalFunction((one - t) * (one - t)));

  PairClassFunction zero(1, 1);
  CHECK(pair_inner_product_t(zero, ones).is_zero());
}

TEST_CASE("restriction") {
  PairClassFunction r = restrict_to_pair(irreducible_character(Partition{1, 1}), 1, 1);
  CHECK(r.at(Partition{1}, Partition{1}) == rf(1));

  PairClassFunction triv = restrict_to_pair(irreducible_character(Partition{3}), 2, 1);
  for (const auto& [cls, v] : triv.values()) {
    (void)cls;
    CHECK(v == rf(1));
  }

  PairClassFunction std21 = restrict_to_pair(irreducible_character(Partition{2, 1}), 2, 1);
  CHECK(std21.at(Partition{2}, Partition{1}) == rf(0));
  CHECK_THROWS(restrict_to_pair(irreducible_character(Partition{2, 1}), 1, 1));
}

TEST_CASE("induction of the trivial pair character") {
  PairClassFunction ones(1, 1);
  ones.set(Partition{1}, Partition{1}, rf(1));
  ClassFunction ind = induce_from_pair(ones, 1, 1);
  CHECK(ind.at(Partition{1, 1}) == rf(2));
  CHECK(ind.at(Partition{2}) == rf(0));

  PairClassFunction zero(1, 1);
  ClassFunction indz = induce_from_pair(zero, 1, 1);
  CHECK(indz.at(Partition{1, 1}).is_zero());
  CHECK(indz.at(Partition{2}).is_zero());
}

TEST_CASE("Frobenius reciprocity for irreducibles up to degree 5") {
  for (int total = 2; total <= 5; ++total) {
    for (int m = 1; m < total; ++m) {
      int n = total - m;
      for (const auto& fp : enumerate_partitions(total)) {
        ClassFunction f = irreducible_character(fp);
        PairClassFunction res = restrict_to_pair(f, m, n);
        for (const auto& mu : enumerate_partitions(m)) {
          for (const auto& nu : enumerate_partitions(n)) {
            PairClassFunction g = PairClassFunction::outer(irreducible_character(mu),
                                                           irreducible_character(nu));
            RationalFunction lhs = inner_product_t(f, induce_from_pair(g, m, n));
            RationalFunction rhs = pair_inner_product_t(res, g);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("induced dimension bookkeeping") {
  // dim Ind(chi^mu x chi^nu) = C(m+n, m) dim(mu) dim(nu).
  auto binom = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      for (const auto& mu : enumerate_partitions(m)) {
        for (const auto& nu : enumerate_partitions(n)) {
          PairClassFunction g = PairClassFunction::outer(irreducible_character(mu),
                                                         irreducible_character(nu));
          ClassFunction ind = induce_from_pair(g, m, n);
          Partition id(std::vector<int>(m + n, 1));
          Rational dim = ind.at(id).evaluate(Rational(0));
          CHECK(dim == Rational(binom(m + n, m) * hook_dimension(mu) * hook_dimension(nu)));
        }
      }
    }
  }
}

TEST_CASE("littlewood-richardson coefficients") {
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{3}, Partition{1, 1}, Partition{1}) == 0);
  CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{1}) == 0);  // weight mismatch
  // Symmetry in the lower pair.
  for (const auto& lam : enumerate_partitions(5)) {
    for (const auto& mu : enumerate_partitions(3)) {
      for (const auto& nu : enumerate_partitions(2)) {
        CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
      }
    }
  }
}
