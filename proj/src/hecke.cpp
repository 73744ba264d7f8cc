#include "greenhall/hecke.hpp"

#include <functional>
#include <stdexcept>

#include "greenhall/gfq.hpp"
#include "greenhall/green.hpp"
#include "greenhall/hall.hpp"

namespace greenhall {

void LocalHeckeInstance::validate() const {
  if (!is_prime_power(q)) {
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  }
  if (eigenvalues.empty()) throw std::invalid_argument("rank must be >= 1");
  for (const Rational& e : eigenvalues) {
    if (e.is_zero()) throw std::invalid_argument("eigenvalue must be nonzero");
  }
}

Rational hom_order(const Partition& mu, const Partition& nu, long q) {
  long exp = 0;
  for (int a : mu.parts()) {
    for (int b : nu.parts()) exp += std::min(a, b);
  }
  return Rational(q).pow(exp);
}

long long brute_force_hom_count(const Partition& mu, const Partition& nu, long q) {
  // Enumerates every F_q-linear map M_nu -> M_mu and keeps those commuting
  // with the two nilpotent actions.
  int nm = mu.weight(), nn = nu.weight();
  if (nn == 0 || nm == 0) return 1;
  Gfq f(static_cast<int>(q));
  auto jordan = [&](const Partition& p, int n) {
    GfMatrix u(n, n);
    int base = 0;
    for (int part : p.parts()) {
      for (int j = 1; j < part; ++j) u.at(base + j - 1, base + j) = 1;
      base += part;
    }
    return u;
  };
  GfMatrix um = jordan(mu, nm);
  GfMatrix un = jordan(nu, nn);
  int cells = nm * nn;
  long long count = 0;
  std::vector<int> digits(cells, 0);
  while (true) {
    GfMatrix phi(nm, nn);
    for (int i = 0; i < cells; ++i) phi.a[i] = digits[i];
    bool commutes = true;
    for (int i = 0; i < nm && commutes; ++i) {
      for (int j = 0; j < nn && commutes; ++j) {
        int lhs = 0, rhs = 0;
        for (int k = 0; k < nn; ++k) lhs = f.add(lhs, f.mul(phi.at(i, k), un.at(k, j)));
        for (int k = 0; k < nm; ++k) rhs = f.add(rhs, f.mul(um.at(i, k), phi.at(k, j)));
        commutes = (lhs == rhs);
      }
    }
    if (commutes) count++;
    int i = 0;
    while (i < cells && digits[i] == q - 1) digits[i++] = 0;
    if (i == cells) break;
    digits[i]++;
  }
  return count;
}

Rational extension_count(const Partition& lambda, const Partition& mu,
                         const Partition& nu, long q) {
  if (lambda.weight() != mu.weight() + nu.weight()) return Rational(0);
  Rational qq(q);
  LaurentPoly g = hall_polynomial(lambda, mu, nu);
  if (g.is_zero()) return Rational(0);
  Rational n = hom_order(mu, nu, q) * g.evaluate(qq) * aut_order_poly(mu).evaluate(qq) *
               aut_order_poly(nu).evaluate(qq) / aut_order_poly(lambda).evaluate(qq);
  if (!n.is_integer() || n.sign() < 0) {
    throw std::logic_error("extension count not a non-negative integer: " + n.str());
  }
  return n;
}

Rational hecke_apply_local(const LocalHeckeInstance& inst) {
  inst.validate();
  Rational qq(inst.q);
  int total = inst.mu.weight() + inst.nu.weight();
  Rational sum_n(0);
  Rational sum_g(0);
  for (const Partition& lam : enumerate_partitions(total)) {
    Rational w = whittaker_value(lam, qq, inst.eigenvalues);
    sum_n += extension_count(lam, inst.mu, inst.nu, inst.q) * w;
    RationalFunction gu = g_upper(lam, inst.mu, inst.nu);
    if (!gu.is_zero()) sum_g += gu.evaluate(qq) * w;
  }
  Rational applied = sum_n / hom_order(inst.mu, inst.nu, inst.q);
  if (applied != sum_g) {
    throw std::logic_error("hecke internal consistency: averaged and structure-constant forms disagree");
  }
  return applied;
}

HeckeReport hecke_identity_check(const LocalHeckeInstance& inst) {
  HeckeReport r;
  r.applied = hecke_apply_local(inst);
  Rational qq(inst.q);
  r.product = whittaker_value(inst.mu, qq, inst.eigenvalues) *
              whittaker_value(inst.nu, qq, inst.eigenvalues);
  r.equal = (r.applied == r.product);
  return r;
}

}  // namespace greenhall
