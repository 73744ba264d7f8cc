#pragma once

#include <cstdint>
#include <vector>

namespace greenhall {

// Returns true iff q = p^k for a prime p and k >= 1; fills *p and *k when
// non-null.
bool is_prime_power(long q, long* p = nullptr, int* k = nullptr);

// Arithmetic tables for a small finite field F_q (q <= 64).  Elements are
// 0..q-1; the representation fixes some irreducible polynomial over F_p, and
// all structural counts used downstream depend only on q.
class Gfq {
 public:
  explicit Gfq(int q);

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;

 private:
  int q_;
  std::vector<int> add_, mul_;
  std::vector<int> neg_, inv_;
};

// Dense row-major matrix over F_q; entries are field codes.
struct GfMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;

  GfMatrix() = default;
  GfMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

using GfVector = std::vector<int>;

// Incremental echelon basis of a subspace of F_q^n; rows kept reduced enough
// to detect membership.
class GfSpan {
 public:
  GfSpan(const Gfq* f, int n) : f_(f), n_(n) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  // Inserts v into the span; returns true if the dimension grew.
  bool insert(GfVector v);
  // True iff v lies in the current span.
  bool contains(GfVector v) const;
  const std::vector<GfVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  int ambient_dim() const { return n_; }

  // Reduces v against the basis in place; returns the first nonzero column
  // of the residue, or -1 if it reduced to zero.
  int reduce(GfVector& v) const;

 private:
  const Gfq* f_;
  int n_;
  std::vector<GfVector> rows_;
  std::vector<int> pivots_;
};

// Matrix-vector product over F_q.
GfVector gf_apply(const Gfq& f, const GfMatrix& m, const GfVector& v);

}  // namespace greenhall
