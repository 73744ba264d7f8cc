#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenhall/characters.hpp"
#include "greenhall/partition.hpp"
#include "greenhall/rational.hpp"

namespace greenhall {

// One closed point of the base curve, modeled by its degree and the exact
// Frobenius eigenvalues on the rank-n local system.
struct Place {
  std::string id;
  int degree = 1;
  std::vector<Rational> eigenvalues;
};

// Rank-n local system over F_q given purely by per-place eigenvalue data.
struct LocalSystemSpec {
  int rank = 1;
  long q = 2;
  std::vector<Place> places;

  // Checks rank >= 1, q a prime power, unique ids, per-place eigenvalue
  // count = rank, eigenvalues nonzero, degree >= 1.  Throws on violation.
  void validate() const;
  const Place& place(const std::string& id) const;
};

// Effective divisor tuple: per place, the n multiplicities (d_1..d_n).
// Absent places mean all zeros.
struct DivisorTuple {
  std::map<std::string, std::vector<int>> entries;
};

enum class WhittakerMode { kPlain, kTop };

// Schur polynomial s_lambda at the given values, via the Jacobi-Trudi
// determinant in complete homogeneous sums.  Zero when lambda has more parts
// than there are values.
Rational schur_eval(const Partition& lambda, const std::vector<Rational>& alpha);

// Test oracle: the same value by direct semistandard-tableau enumeration.
Rational schur_eval_tableau_oracle(const Partition& lambda,
                                   const std::vector<Rational>& alpha);

// Green class function Q^lambda(t) = sum_{lambda' >= lambda}
// Ktilde_{lambda',lambda}(t) chi^{lambda'}.
ClassFunction green_polynomial(const Partition& lambda);

// X^lambda(t) = t^{n(lambda)} Q^lambda(1/t), valuewise.
ClassFunction x_polynomial(const Partition& lambda);

// Whittaker value attached to the weight mu: the dominance sum
// sum_{lambda >= mu} Ktilde_{lambda,mu}(q_x) s_lambda(alpha), running over
// partitions with at most |alpha| parts (longer ones have vanishing Schur
// value).  Accepts mu of any length.
Rational whittaker_value(const Partition& mu, const Rational& q_x,
                         const std::vector<Rational>& alpha);

// mu recovered from the multiplicity vector d via mu_j = d_j + ... + d_n.
Partition weight_from_multiplicities(const std::vector<int>& d);

// Local Whittaker function w_{L,x}(d_1..d_n); d must have exactly rank =
// |alpha| entries (throws on mismatch).
Rational whittaker_local(const std::vector<Rational>& alpha, const Rational& q_x,
                         const std::vector<int>& d);

// Top-degree variant q_x^{n(mu)} s_mu(alpha).
Rational whittaker_local_top(const std::vector<Rational>& alpha, const Rational& q_x,
                             const std::vector<int>& d);

// Product of local factors over the places referenced by D, with
// q_x = q^{deg x}; absent places contribute 1.  Throws on unknown ids.
Rational whittaker_global(const LocalSystemSpec& spec, const DivisorTuple& D,
                          WhittakerMode mode);

}  // namespace greenhall
