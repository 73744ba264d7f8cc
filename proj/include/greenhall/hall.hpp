#pragma once

#include <map>
#include <utility>
#include <vector>

#include "greenhall/laurent.hpp"
#include "greenhall/partition.hpp"
#include "greenhall/rational_function.hpp"

namespace greenhall {

// Finite torsion module over a discrete valuation ring with residue field of
// size q: the direct sum of R/(pi^{type_i}).
struct FiniteModuleType {
  long q = 2;
  Partition type;

  // Throws unless q is a prime power >= 2.
  void validate() const;
};

// Gaussian binomial coefficient [n choose k]_q.
long long gaussian_binomial(int n, int k, long q);

// Smallest prime power >= from.
long next_prime_power(long from);

// Full table {(type, cotype) -> count} of submodules of the type-lambda
// module over residue field size q, by exhaustive enumeration (fast closed
// path for lambda = (1^N), where submodules are exactly the subspaces).
// Cached per (lambda, q).  Throws std::domain_error("too large") when the
// enumeration exceeds the supported scale.
const std::map<std::pair<Partition, Partition>, long long>& submodule_type_table(
    const Partition& lambda, long q);

// Number of submodules N of the type-lambda module with type(N) = mu and
// type(M/N) = nu.  Zero when |mu| + |nu| != |lambda|.
long long count_submodules(const Partition& lambda, const Partition& mu,
                           const Partition& nu, long q);

// Counts all submodules regardless of type.
long long count_all_submodules(const Partition& lambda, long q);

// Interpolation data kept alongside a Hall polynomial, for reporting.
struct HallSample {
  long q;
  long long count;
};
struct HallWitness {
  std::vector<HallSample> nodes;
  HallSample holdout{0, 0};
};

// Hall polynomial g^lambda_{mu,nu}(t): the unique polynomial of degree
// <= n(lambda)-n(mu)-n(nu) through the submodule counts at the smallest
// prime powers, validated at one held-out prime power.  Identically zero
// exactly when the Littlewood-Richardson coefficient c^lambda_{mu,nu}
// vanishes (the zero case is still spot-checked against a count).
// Results are cached; witness, when non-null, receives the samples used.
LaurentPoly hall_polynomial(const Partition& lambda, const Partition& mu,
                            const Partition& nu, HallWitness* witness = nullptr);

// |Aut| polynomial a_pi(t) = t^{|pi|+2n(pi)} prod_i (1-t^{-1})...(1-t^{-m_i}).
LaurentPoly aut_order_poly(const Partition& pi);

// g_lambda^{mu,nu}(t) = t^{2n(mu)+2n(nu)-2n(lambda)} g^lambda_{mu,nu}(t) *
// prod_i phi_{m_i(mu)} phi_{m_i(nu)} / phi_{m_i(lambda)} with
// phi_m = (1-t^{-1})...(1-t^{-m}).  Cross-checked internally against
// hall * aut(mu) * aut(nu) / aut(lambda).
RationalFunction g_upper(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

// f^lambda_{mu,nu}(t) = t^{n(lambda)-n(mu)-n(nu)} g^lambda_{mu,nu}(1/t).
LaurentPoly hl_structure_f(const Partition& lambda, const Partition& mu,
                           const Partition& nu);

// Test support: brute-force |Aut| of the type-pi module over F_q by
// enumerating commuting invertible matrices.  Exponential; small inputs only.
long long brute_force_aut_order(const Partition& pi, long q);

}  // namespace greenhall
