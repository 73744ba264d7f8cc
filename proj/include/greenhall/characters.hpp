#pragma once

#include <map>
#include <utility>
#include <vector>

#include "greenhall/partition.hpp"
#include "greenhall/rational_function.hpp"

namespace greenhall {

// Class function on S_N: one value per partition of N.  Values live in the
// rational-function field uniformly, even when integral.
class ClassFunction {
 public:
  ClassFunction() : degree_(0) { values_[Partition{}] = RationalFunction(0); }
  explicit ClassFunction(int degree);

  int degree() const { return degree_; }
  const std::map<Partition, RationalFunction>& values() const { return values_; }
  const RationalFunction& at(const Partition& cls) const;
  void set(const Partition& cls, const RationalFunction& v);

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction scaled(const RationalFunction& c) const;
  bool operator==(const ClassFunction& o) const {
    return degree_ == o.degree_ && values_ == o.values_;
  }

 private:
  int degree_;
  std::map<Partition, RationalFunction> values_;
};

// Class function on S_m x S_n: one value per pair of partitions.
class PairClassFunction {
 public:
  PairClassFunction(int m, int n);

  int left_degree() const { return m_; }
  int right_degree() const { return n_; }
  const std::map<std::pair<Partition, Partition>, RationalFunction>& values() const {
    return values_;
  }
  const RationalFunction& at(const Partition& mu, const Partition& nu) const;
  void set(const Partition& mu, const Partition& nu, const RationalFunction& v);

  PairClassFunction operator+(const PairClassFunction& o) const;
  PairClassFunction operator-(const PairClassFunction& o) const;
  PairClassFunction scaled(const RationalFunction& c) const;
  bool operator==(const PairClassFunction& o) const {
    return m_ == o.m_ && n_ == o.n_ && values_ == o.values_;
  }

  // Outer product (f x g)(mu, nu) = f(mu) g(nu).
  static PairClassFunction outer(const ClassFunction& f, const ClassFunction& g);

 private:
  int m_, n_;
  std::map<std::pair<Partition, Partition>, RationalFunction> values_;
};

// Integer value of the irreducible character chi^lambda at the class rho,
// by the Murnaghan-Nakayama border-strip recursion (memoized, thread-safe).
long long character_value(const Partition& lambda, const Partition& rho);

// chi^lambda as a class function of degree |lambda|.
ClassFunction irreducible_character(const Partition& lambda);

// z_lambda(t) = prod_i i^{m_i} m_i! / (1-t^i)^{m_i}.
RationalFunction z_factor(const Partition& lambda);

// (f,g)_t = sum_lambda z_lambda(t)^{-1} f_lambda g_lambda.
RationalFunction inner_product_t(const ClassFunction& f, const ClassFunction& g);

// Double-sum analogue over pairs of classes.
RationalFunction pair_inner_product_t(const PairClassFunction& f,
                                      const PairClassFunction& g);

// Restriction to S_m x S_n: value at (mu, nu) is f at the multiset union.
PairClassFunction restrict_to_pair(const ClassFunction& f, int m, int n);

// Induction from S_m x S_n via the multiplicity-binomial formula: the value
// at lambda sums prod_i C(m_i(mu)+m_i(nu), m_i(mu)) g(mu,nu) over all
// splittings of lambda's multiset; classes with no splitting get zero.
ClassFunction induce_from_pair(const PairClassFunction& g, int m, int n);

// Littlewood-Richardson coefficient via the t=0 inner product of the
// restricted character against chi^mu x chi^nu.  Zero on weight mismatch.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

}  // namespace greenhall
