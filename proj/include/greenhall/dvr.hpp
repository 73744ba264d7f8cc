#pragma once

#include <optional>
#include <vector>

#include "greenhall/laurent.hpp"
#include "greenhall/rational.hpp"

namespace greenhall {

// The structured square matrix over a discrete valuation ring: first column
// entries pi^{a_k}, diagonal entries pi^{d_j + ... + d_last} below the top
// row, zeros elsewhere.  a has one more entry than d.
struct ValuationMatrixSpec {
  std::vector<int> a;  // first-column valuations, size m
  std::vector<int> d;  // diagonal data, size m-1

  int size() const { return static_cast<int>(a.size()); }
  // The closed elementary-divisor formulas are proved under
  // a_j <= d_j + ... + d_last for every j >= 2; callers should treat
  // non-conforming specs as outside the guarantee.
  bool conforming() const;
  // Shape/size and non-negativity; throws on violation.
  void validate_shape() const;
};

// Matrix over a DVR with entries unit * pi^valuation; zero entries carry no
// valuation.  Units are exact rationals so minors never cancel silently.
struct DvrMatrix {
  struct Entry {
    bool zero = true;
    int valuation = 0;
    Rational unit;
  };
  int rows = 0, cols = 0;
  std::vector<Entry> entries;

  DvrMatrix() = default;
  DvrMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}
  Entry& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Entry& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
  void set(int r, int c, int valuation, const Rational& unit);
};

// The structured matrix of the spec.
DvrMatrix build_matrix(const ValuationMatrixSpec& spec);

// Elementary divisor valuations in increasing (divisibility) order via exact
// minor computation: v_k = (min valuation over k x k minors) - (min over
// (k-1) x (k-1) minors).  Minors are expanded as polynomials in pi, so
// cancellations are exact.  Entries beyond the rank are nullopt.
std::vector<std::optional<int>> smith_valuations(const DvrMatrix& m);

// The closed formulas: the sequence (d'_1, ..., d'_m) solving the triangular
// weighted-sum system, solved from the last index upward.  Guaranteed to
// match smith_valuations(build_matrix(spec)) when spec.conforming().
// Throws std::domain_error when the system has no non-negative solution.
std::vector<int> elementary_divisors_closed(const ValuationMatrixSpec& spec);

// Increasing valuation chain implied by the closed-form output: the k-th
// divisor valuation is d'_m + d'_{m-1} + ... (suffix sums, shortest first).
std::vector<int> divisor_chain(const std::vector<int>& d_prime);

}  // namespace greenhall
