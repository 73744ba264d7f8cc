#include "greenhall/hall.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "greenhall/characters.hpp"
#include "greenhall/gfq.hpp"

namespace greenhall {

void FiniteModuleType::validate() const {
  if (!is_prime_power(q)) {
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  }
}

long long gaussian_binomial(int n, int k, long q) {
  if (k < 0 || k > n) return 0;
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, exact in mpz.
  std::vector<std::vector<mpz_class>> c(n + 1, std::vector<mpz_class>(k + 1, 0));
  for (int i = 0; i <= n; ++i) c[i][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) {
      mpz_class qp;
      mpz_ui_pow_ui(qp.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(j));
      c[i][j] = (j == i) ? mpz_class(1) : c[i - 1][j - 1] + qp * c[i - 1][j];
    }
  }
  if (!c[n][k].fits_slong_p()) throw std::domain_error("too large");
  return c[n][k].get_si();
}

long next_prime_power(long from) {
  long q = from;
  while (!is_prime_power(q)) ++q;
  return q;
}

namespace {

constexpr long long kStepCap = 400000000;

using TypeTable = std::map<std::pair<Partition, Partition>, long long>;

struct EnumCtx {
  const Gfq* f;
  int n;                        // ambient F_q-dimension
  GfMatrix u;                   // nilpotent operator of Jordan type lambda
  int max_h;                    // largest part of lambda
  std::vector<int> dim_ujm;     // dim U^j M for j = 0..max_h
  long long steps = 0;
  TypeTable* table;
};

std::vector<GfVector> nullspace(const Gfq& f, GfMatrix a) {
  int rows = a.rows, cols = a.cols;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (a.at(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
    int inv = f.inv(a.at(r, c));
    for (int j = 0; j < cols; ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      int m = a.at(i, c);
      for (int j = 0; j < cols; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(m, a.at(r, j)));
      }
    }
    pivot_cols.push_back(c);
    r++;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int pc : pivot_cols) is_pivot[pc] = true;
  std::vector<GfVector> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    GfVector x(cols, 0);
    x[c] = 1;
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
      x[pivot_cols[i]] = f.neg(a.at(static_cast<int>(i), c));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// Visits every subspace of F_q^v exactly once through its reduced column
// echelon row basis.
void for_each_subspace(const Gfq& f, int v,
                       const std::function<void(const std::vector<GfVector>&)>& cb) {
  std::vector<GfVector> empty;
  cb(empty);
  int q = f.q();
  for (int k = 1; k <= v; ++k) {
    std::vector<int> pivots(k);
    std::function<void(int, int)> choose = [&](int idx, int from) {
      if (idx == k) {
        // Free positions: (row, col) with col > pivots[row], col not a pivot.
        std::vector<bool> is_pivot(v, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < k; ++r) {
          for (int c = pivots[r] + 1; c < v; ++c) {
            if (!is_pivot[c]) free_pos.emplace_back(r, c);
          }
        }
        std::vector<GfVector> rows(k, GfVector(v, 0));
        for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
          for (size_t i = 0; i < free_pos.size(); ++i) {
            rows[free_pos[i].first][free_pos[i].second] = digits[i];
          }
          cb(rows);
          size_t i = 0;
          while (i < digits.size() && digits[i] == q - 1) digits[i++] = 0;
          if (i == digits.size()) break;
          digits[i]++;
        }
        return;
      }
      for (int c = from; c <= v - (k - idx); ++c) {
        pivots[idx] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
}

Partition conjugate_from_dims(const std::vector<int>& dims) {
  // dims is a weakly decreasing sequence ending in 0; the successive
  // differences are the conjugate parts.
  std::vector<int> conj;
  for (size_t j = 1; j < dims.size(); ++j) {
    int d = dims[j - 1] - dims[j];
    if (d > 0) conj.push_back(d);
  }
  return Partition(conj).conjugate();
}

void tally_node(EnumCtx& ctx, const std::vector<int>& dims_chain,
                const std::vector<GfSpan>& ej, int dim_t) {
  Partition type = conjugate_from_dims(dims_chain);
  std::vector<int> q_dims;
  q_dims.push_back(ctx.n - dim_t);
  for (int j = 1; j < ctx.max_h; ++j) q_dims.push_back(ej[j - 1].dim() - dim_t);
  q_dims.push_back(0);
  Partition cotype = conjugate_from_dims(q_dims);
  (*ctx.table)[{type, cotype}]++;
}

void visit(EnumCtx& ctx, const std::vector<GfVector>& basis, const GfSpan& span_t,
           const std::vector<int>& dims_chain, const std::vector<GfSpan>& ej) {
  tally_node(ctx, dims_chain, ej, span_t.dim());

  const Gfq& f = *ctx.f;
  int n = ctx.n;
  int dim_t = span_t.dim();

  // P = preimage of T under U, as the nullspace of x -> (Ux reduced mod T).
  GfMatrix a(n, n);
  for (int j = 0; j < n; ++j) {
    GfVector col(n, 0);
    for (int i = 0; i < n; ++i) col[i] = ctx.u.at(i, j);
    span_t.reduce(col);
    for (int i = 0; i < n; ++i) a.at(i, j) = col[i];
  }
  std::vector<GfVector> kernel = nullspace(f, a);

  // Complement of T inside P.
  GfSpan comp_span = span_t;
  std::vector<GfVector> comp;
  for (const auto& kv : kernel) {
    if (comp_span.insert(kv)) comp.push_back(kv);
  }
  int v = static_cast<int>(comp.size());

  // Image U(T), the surjectivity target together with U(W).
  GfSpan u_of_t(&f, n);
  for (const auto& b : basis) u_of_t.insert(gf_apply(f, ctx.u, b));

  for_each_subspace(f, v, [&](const std::vector<GfVector>& w_rows) {
    if (w_rows.empty()) return;  // W = 0 gives back T itself
    if (++ctx.steps > kStepCap) throw std::domain_error("too large");
    int k = static_cast<int>(w_rows.size());
    std::vector<GfVector> lifts(k, GfVector(n, 0));
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < v; ++c) {
        int coeff = w_rows[r][c];
        if (coeff == 0) continue;
        for (int i = 0; i < n; ++i) {
          lifts[r][i] = f.add(lifts[r][i], f.mul(coeff, comp[c][i]));
        }
      }
    }
    // Children satisfy U(N) = T exactly: U(T) + U(W) must fill T.
    GfSpan reach = u_of_t;
    for (const auto& l : lifts) reach.insert(gf_apply(f, ctx.u, l));
    if (reach.dim() != dim_t) return;

    std::vector<GfVector> child_basis = basis;
    GfSpan child_span = span_t;
    std::vector<GfSpan> child_ej = ej;
    for (const auto& l : lifts) {
      child_basis.push_back(l);
      child_span.insert(l);
      for (auto& e : child_ej) e.insert(l);
    }
    std::vector<int> child_dims;
    child_dims.reserve(dims_chain.size() + 1);
    child_dims.push_back(dim_t + k);
    child_dims.insert(child_dims.end(), dims_chain.begin(), dims_chain.end());
    visit(ctx, child_basis, child_span, child_dims, child_ej);
  });
}

TypeTable build_type_table(const Partition& lambda, long q) {
  TypeTable table;
  int n = lambda.weight();
  if (n == 0) {
    table[{Partition{}, Partition{}}] = 1;
    return table;
  }
  if (lambda.part(1) <= 1) {
    // U = 0: submodules are subspaces, classified by dimension alone.
    for (int k = 0; k <= n; ++k) {
      std::vector<int> sub(k, 1), quo(n - k, 1);
      table[{Partition(sub), Partition(quo)}] = gaussian_binomial(n, k, q);
    }
    return table;
  }
  if (q > 31) throw std::domain_error("too large");

  Gfq f(static_cast<int>(q));
  EnumCtx ctx;
  ctx.f = &f;
  ctx.n = n;
  ctx.max_h = lambda.part(1);
  ctx.table = &table;
  ctx.u = GfMatrix(n, n);
  // Jordan chains: within each part, basis vector j maps to j-1.
  int base = 0;
  for (int p : lambda.parts()) {
    for (int j = 1; j < p; ++j) ctx.u.at(base + j - 1, base + j) = 1;
    base += p;
  }
  std::vector<GfSpan> ej;
  for (int j = 1; j < ctx.max_h; ++j) {
    GfSpan s(&f, n);
    int off = 0;
    for (int p : lambda.parts()) {
      for (int k = 0; k < p - j; ++k) {
        GfVector e(n, 0);
        e[off + k] = 1;
        s.insert(std::move(e));
      }
      off += p;
    }
    ej.push_back(std::move(s));
  }
  GfSpan zero_span(&f, n);
  visit(ctx, {}, zero_span, {0}, ej);
  return table;
}

std::map<std::pair<Partition, long>, TypeTable> table_cache;
std::mutex table_mutex;

}  // namespace

const TypeTable& submodule_type_table(const Partition& lambda, long q) {
  if (lambda.weight() > 6) throw std::domain_error("too large");
  if (!is_prime_power(q)) {
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  }
  std::lock_guard<std::mutex> lock(table_mutex);
  auto key = std::make_pair(lambda, q);
  auto it = table_cache.find(key);
  if (it == table_cache.end()) {
    it = table_cache.emplace(key, build_type_table(lambda, q)).first;
  }
  return it->second;
}

long long count_submodules(const Partition& lambda, const Partition& mu,
                           const Partition& nu, long q) {
  if (mu.weight() + nu.weight() != lambda.weight()) return 0;
  const TypeTable& t = submodule_type_table(lambda, q);
  auto it = t.find({mu, nu});
  return it == t.end() ? 0 : it->second;
}

long long count_all_submodules(const Partition& lambda, long q) {
  long long total = 0;
  for (const auto& [key, c] : submodule_type_table(lambda, q)) total += c;
  return total;
}

namespace {

LaurentPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences, expanded to the monomial basis.
  size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  LaurentPoly poly;
  LaurentPoly basis(1);
  for (size_t i = 0; i < n; ++i) {
    poly += basis * LaurentPoly(dd[i]);
    basis *= LaurentPoly::t() - LaurentPoly(xs[i]);
  }
  return poly;
}

std::map<std::tuple<Partition, Partition, Partition>,
         std::pair<LaurentPoly, HallWitness>>
    hall_cache;
std::mutex hall_mutex;

}  // namespace

LaurentPoly hall_polynomial(const Partition& lambda, const Partition& mu,
                            const Partition& nu, HallWitness* witness) {
  if (mu.weight() + nu.weight() != lambda.weight()) {
    if (witness) *witness = HallWitness{};
    return LaurentPoly();
  }
  std::tuple<Partition, Partition, Partition> key{lambda, mu, nu};
  {
    std::lock_guard<std::mutex> lock(hall_mutex);
    auto it = hall_cache.find(key);
    if (it != hall_cache.end()) {
      if (witness) *witness = it->second.second;
      return it->second.first;
    }
  }

  HallWitness wit;
  LaurentPoly result;
  long long lr = lr_coefficient(lambda, mu, nu);
  if (lr == 0) {
    // Identically zero; still check one honest count.
    long long c = count_submodules(lambda, nu, mu, 2);
    wit.holdout = {2, c};
    if (c != 0) {
      throw std::logic_error("hall internal consistency: expected zero count");
    }
  } else {
    std::int64_t deg = n_stat(lambda) - n_stat(mu) - n_stat(nu);
    if (deg < 0) throw std::logic_error("hall internal consistency: negative degree");
    long q = 2;
    std::vector<Rational> xs, ys;
    for (std::int64_t i = 0; i <= deg; ++i) {
      long long c = count_submodules(lambda, nu, mu, q);
      wit.nodes.push_back({q, c});
      xs.push_back(Rational(q));
      ys.push_back(Rational(c));
      q = next_prime_power(q + 1);
    }
    result = interpolate(xs, ys);
    if (!result.has_integer_coeffs() || !result.is_polynomial()) {
      throw std::logic_error("hall internal consistency: non-integral interpolant");
    }
    if (result.is_zero() || result.degree() != deg ||
        result.leading_coeff() != Rational(lr)) {
      throw std::logic_error("hall internal consistency: degree/leading mismatch");
    }
    long long held = count_submodules(lambda, nu, mu, q);
    wit.holdout = {q, held};
    if (result.evaluate(Rational(q)) != Rational(held)) {
      throw std::logic_error("hall internal consistency: holdout mismatch");
    }
  }

  std::lock_guard<std::mutex> lock(hall_mutex);
  hall_cache[key] = {result, wit};
  if (witness) *witness = wit;
  return result;
}

LaurentPoly aut_order_poly(const Partition& pi) {
  LaurentPoly a = LaurentPoly::monomial(Rational(1), pi.weight() + 2 * n_stat(pi));
  LaurentPoly one(1);
  for (const auto& [i, m] : multiplicities(pi)) {
    (void)i;
    for (int k = 1; k <= m; ++k) {
      a *= one - LaurentPoly::monomial(Rational(1), -k);
    }
  }
  if (!a.is_polynomial()) throw std::logic_error("aut polynomial not polynomial");
  return a;
}

RationalFunction g_upper(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (mu.weight() + nu.weight() != lambda.weight()) return RationalFunction(0);
  LaurentPoly g = hall_polynomial(lambda, mu, nu);
  if (g.is_zero()) return RationalFunction(0);
  LaurentPoly one(1);
  auto phi = [&one](const Partition& p) {
    LaurentPoly r(1);
    for (const auto& [i, m] : multiplicities(p)) {
      (void)i;
      for (int k = 1; k <= m; ++k) r *= one - LaurentPoly::monomial(Rational(1), -k);
    }
    return r;
  };
  std::int64_t shift = 2 * (n_stat(mu) + n_stat(nu) - n_stat(lambda));
  LaurentPoly num = g.shifted(shift) * phi(mu) * phi(nu);
  RationalFunction r(num, phi(lambda));
  // Same quantity through the automorphism orders.
  RationalFunction alt(g * aut_order_poly(mu) * aut_order_poly(nu),
                       aut_order_poly(lambda));
  if (r != alt) throw std::logic_error("g_upper internal consistency");
  return r;
}

LaurentPoly hl_structure_f(const Partition& lambda, const Partition& mu,
                           const Partition& nu) {
  if (mu.weight() + nu.weight() != lambda.weight()) return LaurentPoly();
  LaurentPoly g = hall_polynomial(lambda, mu, nu);
  return g.reverse_tilde(n_stat(lambda) - n_stat(mu) - n_stat(nu));
}

long long brute_force_aut_order(const Partition& pi, long q) {
  int n = pi.weight();
  if (n == 0) return 1;
  Gfq f(static_cast<int>(q));
  // Endomorphisms commuting with U are fixed by the images of the chain
  // generators; generator i may map to any element killed by U^{pi_i}.
  GfMatrix u(n, n);
  std::vector<int> gen_index, gen_part;
  int base = 0;
  for (int p : pi.parts()) {
    for (int j = 1; j < p; ++j) u.at(base + j - 1, base + j) = 1;
    gen_index.push_back(base + p - 1);
    gen_part.push_back(p);
    base += p;
  }
  int r = static_cast<int>(gen_index.size());
  // Basis of ker U^s, per generator: unit vectors e_{off+k}, k < min(s, p_j).
  auto kernel_basis = [&](int s) {
    std::vector<int> idx;
    int off = 0;
    for (int p : pi.parts()) {
      for (int k = 0; k < std::min(s, p); ++k) idx.push_back(off + k);
      off += p;
    }
    return idx;
  };
  long long count = 0;
  // DFS over generator images with incremental independence pruning: the
  // columns contributed by generators 0..i must stay independent.
  std::function<void(int, const GfSpan&)> rec = [&](int gi, const GfSpan& span) {
    if (gi == r) {
      count++;
      return;
    }
    std::vector<int> kb = kernel_basis(gen_part[gi]);
    int dim = static_cast<int>(kb.size());
    std::vector<int> digits(dim, 0);
    while (true) {
      GfVector x(n, 0);
      for (int i = 0; i < dim; ++i) x[kb[i]] = digits[i];
      // Columns from this generator: U^j x for j = 0..p-1 must extend the span.
      GfSpan next = span;
      bool ok = true;
      GfVector cur = x;
      for (int j = 0; j < gen_part[gi] && ok; ++j) {
        ok = next.insert(cur);
        if (j + 1 < gen_part[gi]) cur = gf_apply(f, u, cur);
      }
      if (ok) rec(gi + 1, next);
      size_t i = 0;
      while (i < digits.size() && digits[i] == q - 1) digits[i++] = 0;
      if (i == digits.size()) break;
      digits[i]++;
    }
  };
  GfSpan empty(&f, n);
  rec(0, empty);
  return count;
}

}  // namespace greenhall
