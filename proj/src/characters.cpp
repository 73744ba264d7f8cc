#include "greenhall/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace greenhall {

ClassFunction::ClassFunction(int degree) : degree_(degree) {
  for (const Partition& p : enumerate_partitions(degree)) {
    values_[p] = RationalFunction(0);
  }
}

const RationalFunction& ClassFunction::at(const Partition& cls) const {
  auto it = values_.find(cls);
  if (it == values_.end()) throw std::invalid_argument("not a class of S_" + std::to_string(degree_) + ": " + cls.str());
  return it->second;
}

void ClassFunction::set(const Partition& cls, const RationalFunction& v) {
  if (!values_.count(cls)) throw std::invalid_argument("not a class of S_" + std::to_string(degree_) + ": " + cls.str());
  values_[cls] = v;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  ClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v += o.values_.at(cls);
  return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  ClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v -= o.values_.at(cls);
  return r;
}

ClassFunction ClassFunction::scaled(const RationalFunction& c) const {
  ClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v *= c;
  return r;
}

PairClassFunction::PairClassFunction(int m, int n) : m_(m), n_(n) {
  for (const Partition& mu : enumerate_partitions(m)) {
    for (const Partition& nu : enumerate_partitions(n)) {
      values_[{mu, nu}] = RationalFunction(0);
    }
  }
}

const RationalFunction& PairClassFunction::at(const Partition& mu,
                                              const Partition& nu) const {
  auto it = values_.find({mu, nu});
  if (it == values_.end()) throw std::invalid_argument("not a pair class");
  return it->second;
}

void PairClassFunction::set(const Partition& mu, const Partition& nu,
                            const RationalFunction& v) {
  if (!values_.count({mu, nu})) throw std::invalid_argument("not a pair class");
  values_[{mu, nu}] = v;
}

PairClassFunction PairClassFunction::operator+(const PairClassFunction& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("degree mismatch");
  PairClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v += o.values_.at(cls);
  return r;
}

PairClassFunction PairClassFunction::operator-(const PairClassFunction& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("degree mismatch");
  PairClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v -= o.values_.at(cls);
  return r;
}

PairClassFunction PairClassFunction::scaled(const RationalFunction& c) const {
  PairClassFunction r = *this;
  for (auto& [cls, v] : r.values_) v *= c;
  return r;
}

PairClassFunction PairClassFunction::outer(const ClassFunction& f,
                                           const ClassFunction& g) {
  PairClassFunction r(f.degree(), g.degree());
  for (const auto& [mu, fv] : f.values()) {
    for (const auto& [nu, gv] : g.values()) {
      r.set(mu, nu, fv * gv);
    }
  }
  return r;
}

namespace {

// Border-strip removals via beta-numbers: the first-column hook lengths
// {lambda_i + len - i} determine lambda; removing a strip of size r swaps a
// beta-number b for b - r, with sign read off the number of beta-numbers
// passed over.
struct MNKey {
  Partition lambda, rho;
  bool operator<(const MNKey& o) const {
    if (auto c = lambda <=> o.lambda; c != 0) return c < 0;
    return rho < o.rho;
  }
};

std::map<MNKey, long long> mn_cache;
std::mutex mn_mutex;

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  std::vector<int> parts(beta.size());
  int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
  return Partition(std::move(parts));
}

long long mn_value(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight()) throw std::invalid_argument("weight mismatch");
  if (lambda.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto it = mn_cache.find({lambda, rho});
    if (it != mn_cache.end()) return it->second;
  }
  int r = rho.part(1);
  Partition rho_rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda.parts()[i] + (len - 1 - i);
  long long total = 0;
  for (int i = 0; i < len; ++i) {
    int b = beta[i] - r;
    if (b < 0) continue;
    bool clash = false;
    int passed = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[j] == b) clash = true;
      if (beta[j] > b && beta[j] < beta[i]) passed++;
    }
    if (clash) continue;
    std::vector<int> nb = beta;
    nb[i] = b;
    long long sub = mn_value(from_beta(std::move(nb)), rho_rest);
    total += (passed % 2 == 0) ? sub : -sub;
  }
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache[{lambda, rho}] = total;
  }
  return total;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& rho) {
  return mn_value(lambda, rho);
}

ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction f(lambda.weight());
  for (const auto& [cls, v] : f.values()) {
    (void)v;
    f.set(cls, RationalFunction(Rational(character_value(lambda, cls))));
  }
  return f;
}

RationalFunction z_factor(const Partition& lambda) {
  RationalFunction z(1);
  LaurentPoly one(1);
  for (const auto& [i, m] : multiplicities(lambda)) {
    Rational factorial(1);
    Rational ipow(1);
    for (int k = 1; k <= m; ++k) factorial *= Rational(k);
    for (int k = 0; k < m; ++k) ipow *= Rational(i);
    LaurentPoly cyc = one - LaurentPoly::monomial(Rational(1), i);
    LaurentPoly den(1);
    for (int k = 0; k < m; ++k) den *= cyc;
    z *= RationalFunction(LaurentPoly(ipow * factorial), den);
  }
  return z;
}

RationalFunction inner_product_t(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
  RationalFunction acc(0);
  for (const auto& [cls, fv] : f.values()) {
    acc += fv * g.at(cls) / z_factor(cls);
  }
  return acc;
}

RationalFunction pair_inner_product_t(const PairClassFunction& f,
                                      const PairClassFunction& g) {
  if (f.left_degree() != g.left_degree() || f.right_degree() != g.right_degree()) {
    throw std::invalid_argument("degree mismatch");
  }
  RationalFunction acc(0);
  for (const auto& [cls, fv] : f.values()) {
    acc += fv * g.at(cls.first, cls.second) / (z_factor(cls.first) * z_factor(cls.second));
  }
  return acc;
}

PairClassFunction restrict_to_pair(const ClassFunction& f, int m, int n) {
  if (f.degree() != m + n) throw std::invalid_argument("bad split");
  PairClassFunction r(m, n);
  for (const auto& [cls, v] : r.values()) {
    (void)v;
    r.set(cls.first, cls.second, f.at(union_partition(cls.first, cls.second)));
  }
  return r;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ClassFunction induce_from_pair(const PairClassFunction& g, int m, int n) {
  if (g.left_degree() != m || g.right_degree() != n) {
    throw std::invalid_argument("degree mismatch");
  }
  ClassFunction r(m + n);
  for (const auto& [pair_cls, gv] : g.values()) {
    const auto& [mu, nu] = pair_cls;
    Partition lambda = union_partition(mu, nu);
    auto mm = multiplicities(mu);
    auto mn = multiplicities(nu);
    long long weight = 1;
    for (const auto& [i, mi] : multiplicities(lambda)) {
      auto it = mm.find(i);
      int a = it == mm.end() ? 0 : it->second;
      weight *= binomial(mi, a);
    }
    r.set(lambda, r.at(lambda) + gv * RationalFunction(Rational(weight)));
  }
  return r;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  int m = mu.weight(), n = nu.weight();
  PairClassFunction res = restrict_to_pair(irreducible_character(lambda), m, n);
  PairClassFunction prod =
      PairClassFunction::outer(irreducible_character(mu), irreducible_character(nu));
  RationalFunction ip = pair_inner_product_t(res, prod);
  return ip.evaluate(Rational(0)).to_long_long();
}

}  // namespace greenhall
