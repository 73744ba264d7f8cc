#include "greenhall/dvr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace greenhall {

bool ValuationMatrixSpec::conforming() const {
  validate_shape();
  int m = size();
  for (int j = 2; j <= m; ++j) {
    int suffix = 0;
    for (int l = j; l <= m; ++l) suffix += d[l - 2];
    if (a[j - 1] > suffix) return false;
  }
  return true;
}

void ValuationMatrixSpec::validate_shape() const {
  if (a.empty()) throw std::invalid_argument("empty spec");
  if (d.size() + 1 != a.size()) {
    throw std::invalid_argument("d must have one fewer entry than a");
  }
  for (int v : a) {
    if (v < 0) throw std::invalid_argument("negative valuation");
  }
  for (int v : d) {
    if (v < 0) throw std::invalid_argument("negative valuation");
  }
}

void DvrMatrix::set(int r, int c, int valuation, const Rational& unit) {
  if (unit.is_zero()) throw std::invalid_argument("unit must be nonzero");
  at(r, c) = Entry{false, valuation, unit};
}

DvrMatrix build_matrix(const ValuationMatrixSpec& spec) {
  spec.validate_shape();
  int m = spec.size();
  DvrMatrix mat(m, m);
  for (int k = 0; k < m; ++k) mat.set(k, 0, spec.a[k], Rational(1));
  for (int j = 1; j < m; ++j) {
    int suffix = 0;
    for (int l = j; l < m; ++l) suffix += spec.d[l - 1];
    mat.set(j, j, suffix, Rational(1));
  }
  return mat;
}

namespace {

LaurentPoly entry_poly(const DvrMatrix::Entry& e) {
  if (e.zero) return LaurentPoly();
  return LaurentPoly::monomial(e.unit, e.valuation);
}

// Exact determinant of a k x k submatrix as a polynomial in pi.
LaurentPoly minor_poly(const DvrMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (perm[i] > perm[j]) inversions++;
      }
    }
    LaurentPoly term(Rational(inversions % 2 == 0 ? 1 : -1));
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      const auto& e = m.at(rows[i], cols[perm[i]]);
      if (e.zero) {
        zero = true;
      } else {
        term *= entry_poly(e);
      }
    }
    if (!zero) det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == k) {
      out.push_back(cur);
      return;
    }
    for (int c = from; c <= n - (k - idx); ++c) {
      cur[idx] = c;
      rec(idx + 1, c + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<std::optional<int>> smith_valuations(const DvrMatrix& m) {
  int n = std::min(m.rows, m.cols);
  std::vector<std::optional<int>> result;
  long long prev_min = 0;  // min valuation over 0x0 minors (empty det = 1)
  bool alive = true;
  for (int k = 1; k <= n; ++k) {
    std::optional<long long> best;
    if (alive) {
      std::vector<std::vector<int>> row_sets, col_sets;
      subsets_of_size(m.rows, k, row_sets);
      subsets_of_size(m.cols, k, col_sets);
      for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
          LaurentPoly det = minor_poly(m, rs, cs);
          if (det.is_zero()) continue;
          long long v = det.valuation();
          if (!best || v < *best) best = v;
        }
      }
    }
    if (!best) {
      alive = false;
      result.push_back(std::nullopt);
    } else {
      result.push_back(static_cast<int>(*best - prev_min));
      prev_min = *best;
    }
  }
  return result;
}

std::vector<int> elementary_divisors_closed(const ValuationMatrixSpec& spec) {
  spec.validate_shape();
  int m = spec.size();
  // 1-based local indexing; d_j for j in 2..m is spec.d[j-2].
  auto dval = [&](int j) { return spec.d[j - 2]; };
  std::vector<long long> w(m + 2, 0);
  {
    long long s = 0;
    for (int l = 2; l <= m; ++l) s += static_cast<long long>(l - 1) * dval(l);
    w[1] = spec.a[0] + s;
  }
  for (int j = 2; j <= m; ++j) {
    long long best = -1;
    for (int k = 1; k <= j; ++k) {
      long long s = 0;
      for (int l = j + 1; l <= m; ++l) s += static_cast<long long>(l - j) * dval(l);
      long long cand = spec.a[k - 1] + s;
      if (best < 0 || cand < best) best = cand;
    }
    for (int ell = j + 1; ell <= m; ++ell) {
      long long s = 0;
      for (int l = j; l <= m; ++l) s += static_cast<long long>(l - j + 1) * dval(l);
      long long tail = 0;
      for (int l = ell; l <= m; ++l) tail += dval(l);
      long long cand = spec.a[ell - 1] + s - tail;
      if (best < 0 || cand < best) best = cand;
    }
    w[j] = best;
  }
  // Suffix sums sigma_j = w_j - w_{j+1}, then d'_j = sigma_j - sigma_{j+1}.
  std::vector<long long> sigma(m + 2, 0);
  for (int j = m; j >= 1; --j) sigma[j] = w[j] - w[j + 1];
  std::vector<int> dp(m);
  for (int j = 1; j <= m; ++j) {
    long long v = sigma[j] - sigma[j + 1];
    if (v < 0) throw std::domain_error("no non-negative solution");
    dp[j - 1] = static_cast<int>(v);
  }
  return dp;
}

std::vector<int> divisor_chain(const std::vector<int>& d_prime) {
  std::vector<int> chain;
  int acc = 0;
  for (auto it = d_prime.rbegin(); it != d_prime.rend(); ++it) {
    acc += *it;
    chain.push_back(acc);
  }
  return chain;
}

}  // namespace greenhall
