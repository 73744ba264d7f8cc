#pragma once

#include <vector>

#include "greenhall/partition.hpp"
#include "greenhall/rational.hpp"

namespace greenhall {

// Local Hecke verification instance: residue size q at the place, types mu
// (existing torsion) and nu (the modification), and the Frobenius
// eigenvalues of the ambient local system.
struct LocalHeckeInstance {
  long q = 2;
  Partition mu;
  Partition nu;
  std::vector<Rational> eigenvalues;

  void validate() const;
};

// |Hom(N_nu, M_mu)| = q^{sum_{i,j} min(mu_i, nu_j)}.
Rational hom_order(const Partition& mu, const Partition& nu, long q);

// Test support: the same count by enumerating matrices commuting with the
// two nilpotent actions.  Exponential; small inputs only.
long long brute_force_hom_count(const Partition& mu, const Partition& nu, long q);

// Number N_x(lambda) of extension classes of N_nu by M_mu with middle term
// of type lambda: hom_order * g^lambda_{mu,nu}(q) * a_mu(q) * a_nu(q) /
// a_lambda(q).  Always a non-negative integer (checked).
Rational extension_count(const Partition& lambda, const Partition& mu,
                         const Partition& nu, long q);

// The averaged Hecke sum (1/|Hom|) sum_lambda N_x(lambda) w(lambda),
// cross-checked against the structure-constant form
// sum_lambda g_lambda^{mu,nu}(q) w(lambda); disagreement throws.
Rational hecke_apply_local(const LocalHeckeInstance& inst);

struct HeckeReport {
  Rational applied;   // hecke_apply_local
  Rational product;   // w(mu-data) * w(nu-data)
  bool equal = false;
};

// Compares the averaged Hecke sum with the product of the two Whittaker
// values; inequality is reported, not thrown.
HeckeReport hecke_identity_check(const LocalHeckeInstance& inst);

}  // namespace greenhall
