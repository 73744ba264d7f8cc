#include "greenhall/green.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "greenhall/gfq.hpp"
#include "greenhall/kostka.hpp"

namespace greenhall {

void LocalSystemSpec::validate() const {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (!is_prime_power(q)) {
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  }
  std::set<std::string> ids;
  for (const Place& p : places) {
    if (!ids.insert(p.id).second) {
      throw std::invalid_argument("duplicate place id: " + p.id);
    }
    if (p.degree < 1) throw std::invalid_argument("place degree must be >= 1");
    if (static_cast<int>(p.eigenvalues.size()) != rank) {
      throw std::invalid_argument("place " + p.id + ": eigenvalue count != rank");
    }
    for (const Rational& e : p.eigenvalues) {
      if (e.is_zero()) throw std::invalid_argument("eigenvalue must be nonzero");
    }
  }
}

const Place& LocalSystemSpec::place(const std::string& id) const {
  for (const Place& p : places) {
    if (p.id == id) return p;
  }
  throw std::invalid_argument("unknown place id: " + id);
}

Rational schur_eval(const Partition& lambda, const std::vector<Rational>& alpha) {
  int n = static_cast<int>(alpha.size());
  int l = lambda.length();
  if (l > n) return Rational(0);
  if (l == 0) return Rational(1);
  // Complete homogeneous sums h_0..h_max over alpha.
  int hmax = lambda.part(1) + l;
  std::vector<Rational> h(hmax + 1, Rational(0));
  h[0] = Rational(1);
  for (int v = 0; v < n; ++v) {
    for (int k = 1; k <= hmax; ++k) h[k] += alpha[v] * h[k - 1];
  }
  auto h_at = [&](int k) { return k < 0 ? Rational(0) : h[k]; };
  // det(h_{lambda_i - i + j}) by Gaussian elimination with exact pivots.
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = h_at(lambda.parts()[i] - (i + 1) + (j + 1));
  }
  Rational det(1);
  for (int c = 0; c < l; ++c) {
    int pr = -1;
    for (int r = c; r < l; ++r) {
      if (!m[r][c].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) return Rational(0);
    if (pr != c) {
      std::swap(m[pr], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = Rational(1) / m[c][c];
    for (int r = c + 1; r < l; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational factor = m[r][c] * inv;
      for (int j = c; j < l; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  return det;
}

Rational schur_eval_tableau_oracle(const Partition& lambda,
                                   const std::vector<Rational>& alpha) {
  int n = static_cast<int>(alpha.size());
  if (lambda.length() > n) return Rational(0);
  Rational total(0);
  // Direct cell-by-cell fill over SSYT with entries in 1..n.
  std::vector<std::vector<int>> cells(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) cells[i].assign(lambda.parts()[i], 0);
  std::function<void(int, int)> fill = [&](int row, int col) {
    if (row == lambda.length()) {
      Rational prod(1);
      for (int i = 0; i < lambda.length(); ++i) {
        for (int v : cells[i]) prod *= alpha[v - 1];
      }
      total += prod;
      return;
    }
    int nrow = row, ncol = col + 1;
    if (ncol >= lambda.parts()[row]) {
      nrow = row + 1;
      ncol = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, cells[row][col - 1]);
    if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
    for (int v = lo; v <= n; ++v) {
      cells[row][col] = v;
      fill(nrow, ncol);
    }
    cells[row][col] = 0;
  };
  if (lambda.empty()) return Rational(1);
  fill(0, 0);
  return total;
}

namespace {

// Partitions of |mu| with at most max_parts parts dominating mu.
std::vector<Partition> dominating_partitions(const Partition& mu, int max_parts) {
  std::vector<Partition> out;
  for (const Partition& lam : enumerate_partitions(mu.weight(), max_parts)) {
    if (mu.weight() == 0 || dominance_leq(mu, lam)) out.push_back(lam);
  }
  return out;
}

}  // namespace

ClassFunction green_polynomial(const Partition& lambda) {
  ClassFunction q(lambda.weight());
  for (const Partition& lp : dominating_partitions(lambda, lambda.weight())) {
    RationalFunction kt(kostka_tilde(lp, lambda));
    ClassFunction chi = irreducible_character(lp);
    q = q + chi.scaled(kt);
  }
  return q;
}

ClassFunction x_polynomial(const Partition& lambda) {
  ClassFunction q = green_polynomial(lambda);
  RationalFunction shift(LaurentPoly::monomial(Rational(1), n_stat(lambda)));
  ClassFunction x(lambda.weight());
  for (const auto& [cls, v] : q.values()) {
    x.set(cls, shift * v.substitute_inverse());
  }
  return x;
}

Rational whittaker_value(const Partition& mu, const Rational& q_x,
                         const std::vector<Rational>& alpha) {
  int n = static_cast<int>(alpha.size());
  Rational acc(0);
  for (const Partition& lam : dominating_partitions(mu, n)) {
    Rational kt = kostka_tilde(lam, mu).evaluate(q_x);
    if (kt.is_zero()) continue;
    acc += kt * schur_eval(lam, alpha);
  }
  return acc;
}

Partition weight_from_multiplicities(const std::vector<int>& d) {
  std::vector<int> mu(d.size());
  int suffix = 0;
  for (int j = static_cast<int>(d.size()) - 1; j >= 0; --j) {
    if (d[j] < 0) throw std::invalid_argument("negative multiplicity");
    suffix += d[j];
    mu[j] = suffix;
  }
  return Partition(std::move(mu));
}

Rational whittaker_local(const std::vector<Rational>& alpha, const Rational& q_x,
                         const std::vector<int>& d) {
  if (d.size() != alpha.size()) {
    throw std::invalid_argument("multiplicity vector length != rank");
  }
  return whittaker_value(weight_from_multiplicities(d), q_x, alpha);
}

Rational whittaker_local_top(const std::vector<Rational>& alpha, const Rational& q_x,
                             const std::vector<int>& d) {
  if (d.size() != alpha.size()) {
    throw std::invalid_argument("multiplicity vector length != rank");
  }
  Partition mu = weight_from_multiplicities(d);
  return q_x.pow(n_stat(mu)) * schur_eval(mu, alpha);
}

Rational whittaker_global(const LocalSystemSpec& spec, const DivisorTuple& D,
                          WhittakerMode mode) {
  spec.validate();
  Rational prod(1);
  for (const auto& [id, d] : D.entries) {
    const Place& p = spec.place(id);
    if (static_cast<int>(d.size()) != spec.rank) {
      throw std::invalid_argument("place " + id + ": multiplicity count != rank");
    }
    Rational q_x = Rational(spec.q).pow(p.degree);
    prod *= (mode == WhittakerMode::kTop)
                ? whittaker_local_top(p.eigenvalues, q_x, d)
                : whittaker_local(p.eigenvalues, q_x, d);
  }
  return prod;
}

}  // namespace greenhall
