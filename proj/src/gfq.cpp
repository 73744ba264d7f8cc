#include "greenhall/gfq.hpp"

#include <stdexcept>

namespace greenhall {

bool is_prime_power(long q, long* p_out, int* k_out) {
  if (q < 2) return false;
  long p = 0;
  long m = q;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = m;  // q itself is prime
  int k = 0;
  while (m % p == 0) {
    m /= p;
    k++;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

namespace {

// Polynomial arithmetic over F_p on digit vectors, used only to build the
// field tables at construction time.
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, long p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<int>((prod[i + j] + 1L * a[i] * b[j]) % p);
    }
  }
  int deg = static_cast<int>(modulus.size()) - 1;
  for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
    int c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) {
      long v = prod[i - deg + j] - 1L * c * modulus[j] % p;
      prod[i - deg + j] = static_cast<int>(((v % p) + p) % p);
    }
  }
  prod.resize(deg);
  return prod;
}

bool divides(const std::vector<int>& d, std::vector<int> n, long p) {
  // Polynomial long division test over F_p; d monic.
  int dd = static_cast<int>(d.size()) - 1;
  auto inv_mod = [&](long a) {
    long r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  long lead_inv = inv_mod(d[dd]);
  for (int i = static_cast<int>(n.size()) - 1; i >= dd; --i) {
    if (n[i] == 0) continue;
    long c = n[i] * lead_inv % p;
    for (int j = 0; j <= dd; ++j) {
      long v = n[i - dd + j] - c * d[j] % p;
      n[i - dd + j] = static_cast<int>(((v % p) + p) % p);
    }
  }
  for (int i = 0; i < dd; ++i) {
    if (n[i] != 0) return false;
  }
  return true;
}

std::vector<int> find_irreducible(long p, int k) {
  // Brute-force search over monic degree-k polynomials: irreducible iff not
  // divisible by any monic polynomial of degree 1..k/2.
  std::vector<int> coeffs(k + 1, 0);
  coeffs[k] = 1;
  long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < k; ++i) {
      coeffs[i] = static_cast<int>(c % p);
      c /= p;
    }
    bool irred = true;
    for (int dd = 1; irred && dd <= k / 2; ++dd) {
      long dcount = 1;
      for (int i = 0; i < dd; ++i) dcount *= p;
      std::vector<int> div(dd + 1, 0);
      div[dd] = 1;
      for (long dc = 0; dc < dcount; ++dc) {
        long x = dc;
        for (int i = 0; i < dd; ++i) {
          div[i] = static_cast<int>(x % p);
          x /= p;
        }
        if (divides(div, coeffs, p)) {
          irred = false;
          break;
        }
      }
    }
    if (irred) return coeffs;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Gfq::Gfq(int q) : q_(q) {
  long p;
  int k;
  if (q < 2 || q > 64 || !is_prime_power(q, &p, &k)) {
    throw std::invalid_argument("not a supported prime power: " + std::to_string(q));
  }
  add_.resize(static_cast<size_t>(q) * q);
  mul_.resize(static_cast<size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, -1);

  // Element code = base-p digit vector of its polynomial representative.
  auto decode = [&](int code) {
    std::vector<int> digits(k, 0);
    for (int i = 0; i < k; ++i) {
      digits[i] = code % static_cast<int>(p);
      code /= static_cast<int>(p);
    }
    return digits;
  };
  auto encode = [&](const std::vector<int>& digits) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * static_cast<int>(p) + digits[i];
    return code;
  };
  std::vector<int> modulus = (k == 1) ? std::vector<int>{0, 1} : find_irreducible(p, k);

  for (int a = 0; a < q; ++a) {
    auto da = decode(a);
    for (int b = 0; b < q; ++b) {
      auto db = decode(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = static_cast<int>((da[i] + db[i]) % p);
      add_[static_cast<size_t>(a) * q + b] = encode(sum);
      mul_[static_cast<size_t>(a) * q + b] =
          (k == 1) ? static_cast<int>((1L * a * b) % p)
                   : encode(poly_mul_mod(da, db, modulus, p));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul_[static_cast<size_t>(a) * q + b] == 1) inv_[a] = b;
    }
  }
}

int Gfq::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

bool GfSpan::insert(GfVector v) {
  int col = reduce(v);
  if (col < 0) return false;
  // Normalize the new pivot to 1.
  int piv_inv = f_->inv(v[col]);
  for (int j = 0; j < n_; ++j) v[j] = f_->mul(v[j], piv_inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(col);
  return true;
}

bool GfSpan::contains(GfVector v) const { return reduce(v) < 0; }

int GfSpan::reduce(GfVector& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    int c = v[pivots_[r]];
    if (c != 0) {
      // v -= c * row (rows have pivot value 1).
      for (int j = 0; j < n_; ++j) {
        v[j] = f_->sub(v[j], f_->mul(c, rows_[r][j]));
      }
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (v[j] != 0) return j;
  }
  return -1;
}

GfVector gf_apply(const Gfq& f, const GfMatrix& m, const GfVector& v) {
  GfVector out(m.rows, 0);
  for (int r = 0; r < m.rows; ++r) {
    int acc = 0;
    for (int c = 0; c < m.cols; ++c) {
      acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace greenhall
