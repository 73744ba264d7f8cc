#include "greenhall/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "greenhall/characters.hpp"
#include "greenhall/green.hpp"
#include "greenhall/hall.hpp"
#include "greenhall/hecke.hpp"
#include "greenhall/json_io.hpp"
#include "greenhall/kostka.hpp"

namespace greenhall {

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : cases) {
    if (c.pass) n++;
  }
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kostka-len2", "orthogonality", "lemma42-res", "lemma42-ind",
      "hecke-41",    "snf-33",        "telescope-n2"};
  return names;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num_dist(-6, 6);
  std::uniform_int_distribution<int> den_dist(1, 3);
  int num = 0;
  while (num == 0) num = num_dist(rng);
  return Rational(num, den_dist(rng));
}

ValuationMatrixSpec random_conforming_spec(std::mt19937_64& rng, int max_size,
                                           int max_val) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<int> val_dist(0, max_val);
  ValuationMatrixSpec spec;
  int m = size_dist(rng);
  spec.d.resize(m - 1);
  for (int& v : spec.d) v = val_dist(rng);
  spec.a.resize(m);
  spec.a[0] = val_dist(rng);
  for (int j = 2; j <= m; ++j) {
    int suffix = 0;
    for (int l = j; l <= m; ++l) suffix += spec.d[l - 2];
    std::uniform_int_distribution<int> bounded(0, std::min(max_val, suffix));
    spec.a[j - 1] = bounded(rng);
  }
  return spec;
}

namespace {

using Clock = std::chrono::steady_clock;

class CaseRecorder {
 public:
  explicit CaseRecorder(SuiteReport* report) : report_(report) {}

  template <typename L, typename R>
  void record(const std::string& id, const L& lhs, const R& rhs, Clock::time_point start) {
    SuiteCase c;
    c.id = id;
    std::ostringstream ls, rs;
    ls << lhs;
    rs << rhs;
    c.lhs = ls.str();
    c.rhs = rs.str();
    c.pass = (c.lhs == c.rhs);
    c.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    report_->cases.push_back(std::move(c));
  }

 private:
  SuiteReport* report_;
};

std::string pad2(int v) {
  std::ostringstream os;
  if (v < 10) os << '0';
  os << v;
  return os.str();
}

std::string pad5(int v) {
  std::ostringstream os;
  for (int t = 10000; t > 1; t /= 10) {
    if (v < t) os << '0';
  }
  os << v;
  return os.str();
}

// Deterministic across platforms, unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SuiteReport suite_kostka_len2(int bound) {
  SuiteReport rep;
  CaseRecorder rec(&rep);
  for (int w = 1; w <= bound; ++w) {
    auto parts = enumerate_partitions(w, 2);
    for (const Partition& lam : parts) {
      for (const Partition& mu : parts) {
        if (!dominance_leq(mu, lam)) continue;
        auto start = Clock::now();
        LaurentPoly k = kostka_foulkes(lam, mu);
        LaurentPoly expected =
            LaurentPoly::monomial(Rational(1), lam.part(1) - mu.part(1));
        rec.record("w" + pad2(w) + "/lambda=" + lam.str() + "/mu=" + mu.str(), k,
                   expected, start);
      }
    }
  }
  return rep;
}

SuiteReport suite_orthogonality(int bound) {
  SuiteReport rep;
  CaseRecorder rec(&rep);
  for (int w = 0; w <= bound; ++w) {
    auto parts = enumerate_partitions(w);
    for (const Partition& lam : parts) {
      ClassFunction xl = x_polynomial(lam);
      for (const Partition& lp : parts) {
        auto start = Clock::now();
        RationalFunction ip = inner_product_t(xl, x_polynomial(lp));
        RationalFunction expected(0);
        if (lam == lp) {
          LaurentPoly prod(1);
          LaurentPoly one(1);
          for (const auto& [i, m] : multiplicities(lam)) {
            (void)i;
            for (int k = 1; k <= m; ++k) {
              prod *= one - LaurentPoly::monomial(Rational(1), k);
            }
          }
          expected = RationalFunction(prod);
        }
        rec.record("w" + pad2(w) + "/lambda=" + lam.str() + "/lambda'=" + lp.str(),
                   ip, expected, start);
      }
    }
  }
  return rep;
}

SuiteReport suite_lemma42_res(int bound) {
  SuiteReport rep;
  CaseRecorder rec(&rep);
  for (int total = 0; total <= bound; ++total) {
    for (int m = 0; m <= total; ++m) {
      int n = total - m;
      for (const Partition& lam : enumerate_partitions(total)) {
        auto start = Clock::now();
        PairClassFunction lhs = restrict_to_pair(green_polynomial(lam), m, n);
        PairClassFunction rhs(m, n);
        for (const Partition& mu : enumerate_partitions(m)) {
          ClassFunction qmu = green_polynomial(mu);
          for (const Partition& nu : enumerate_partitions(n)) {
            RationalFunction g(hall_polynomial(lam, mu, nu));
            if (g.is_zero()) continue;
            rhs = rhs + PairClassFunction::outer(qmu, green_polynomial(nu)).scaled(g);
          }
        }
        rec.record("m" + pad2(m) + "n" + pad2(n) + "/lambda=" + lam.str(),
                   to_json(lhs).dump(), to_json(rhs).dump(), start);
      }
    }
  }
  return rep;
}

SuiteReport suite_lemma42_ind(int bound) {
  SuiteReport rep;
  CaseRecorder rec(&rep);
  for (int total = 0; total <= bound; ++total) {
    for (int m = 0; m <= total; ++m) {
      int n = total - m;
      for (const Partition& mu : enumerate_partitions(m)) {
        ClassFunction qmu = green_polynomial(mu);
        for (const Partition& nu : enumerate_partitions(n)) {
          auto start = Clock::now();
          ClassFunction lhs =
              induce_from_pair(PairClassFunction::outer(qmu, green_polynomial(nu)), m, n);
          ClassFunction rhs(total);
          for (const Partition& lam : enumerate_partitions(total)) {
            RationalFunction g = g_upper(lam, mu, nu);
            if (g.is_zero()) continue;
            rhs = rhs + green_polynomial(lam).scaled(g);
          }
          rec.record("m" + pad2(m) + "n" + pad2(n) + "/mu=" + mu.str() + "/nu=" + nu.str(),
                     to_json(lhs).dump(), to_json(rhs).dump(), start);
        }
      }
    }
  }
  return rep;
}

SuiteReport suite_hecke_41(int bound, unsigned long seed) {
  SuiteReport rep;
  CaseRecorder rec(&rep);
  const long qs[] = {2, 3, 5};
  const int draws = 5;
  for (int rank = 1; rank <= 3; ++rank) {
    for (int total = 0; total <= bound; ++total) {
      for (int m = 0; m <= total; ++m) {
        int n = total - m;
        for (const Partition& mu : enumerate_partitions(m)) {
          for (const Partition& nu : enumerate_partitions(n)) {
            for (long q : qs) {
              // One deterministic stream per grid point.
              std::ostringstream key;
              key << rank << "|" << total << "|" << mu.str() << "|" << nu.str() << "|" << q;
              std::mt19937_64 rng(seed ^ fnv1a(key.str()));
              for (int d = 0; d < draws; ++d) {
                LocalHeckeInstance inst;
                inst.q = q;
                inst.mu = mu;
                inst.nu = nu;
                for (int i = 0; i < rank; ++i) {
                  inst.eigenvalues.push_back(random_nonzero_rational(rng));
                }
                auto start = Clock::now();
                HeckeReport hr = hecke_identity_check(inst);
                rec.record("r" + pad2(rank) + "/q" + pad2(static_cast<int>(q)) + "/mu=" +
                               mu.str() + "/nu=" + nu.str() + "/draw" + pad2(d),
                           hr.applied, hr.product, start);
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

SuiteReport suite_telescope_n2(int bound, unsigned long seed) {
  SuiteReport rep;
  CaseRecorder rec(&rep);
  const long qs[] = {2, 3, 4};
  const int draws = 5;
  std::mt19937_64 rng(seed);
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> alpha = {random_nonzero_rational(rng),
                                   random_nonzero_rational(rng)};
    for (long q : qs) {
      Rational qq(q);
      for (int m2 = 1; 2 * m2 <= bound; ++m2) {
        for (int m1 = 0; m1 + 2 * m2 <= bound; ++m1) {
          auto start = Clock::now();
          Rational lhs = whittaker_local(alpha, qq, {m1, m2}) -
                         whittaker_local(alpha, qq, {m1 + 2, m2 - 1});
          Rational rhs =
              qq.pow(m2) * schur_eval(Partition{m1 + m2, m2}, alpha);
          rec.record("draw" + pad2(d) + "/q" + pad2(static_cast<int>(q)) + "/m1=" +
                         pad2(m1) + "/m2=" + pad2(m2),
                     lhs, rhs, start);
        }
      }
    }
  }
  return rep;
}

}  // namespace

SuiteReport snf_fuzz(int count, unsigned long seed, int max_size, int max_val) {
  SuiteReport rep;
  rep.suite_name = "snf-33";
  rep.size_bound = max_size;
  rep.seed = seed;
  CaseRecorder rec(&rep);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    ValuationMatrixSpec spec = random_conforming_spec(rng, max_size, max_val);
    auto start = Clock::now();
    std::vector<int> closed = divisor_chain(elementary_divisors_closed(spec));
    std::vector<std::optional<int>> oracle = smith_valuations(build_matrix(spec));
    std::ostringstream ls, rs;
    for (size_t k = 0; k < closed.size(); ++k) ls << (k ? "," : "") << closed[k];
    for (size_t k = 0; k < oracle.size(); ++k) {
      rs << (k ? "," : "");
      if (oracle[k]) {
        rs << *oracle[k];
      } else {
        rs << "inf";
      }
    }
    std::ostringstream id;
    id << "case" << pad5(i) << "/a=";
    for (size_t k = 0; k < spec.a.size(); ++k) id << (k ? "," : "") << spec.a[k];
    id << "/d=";
    for (size_t k = 0; k < spec.d.size(); ++k) id << (k ? "," : "") << spec.d[k];
    rec.record(id.str(), ls.str(), rs.str(), start);
  }
  std::sort(rep.cases.begin(), rep.cases.end(),
            [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
  return rep;
}

SuiteReport run_identity_suite(const std::string& name, int size_bound,
                               unsigned long seed) {
  SuiteReport rep;
  if (name == "kostka-len2") {
    if (size_bound > 40) throw std::domain_error("bound too large for kostka-len2");
    rep = suite_kostka_len2(size_bound);
  } else if (name == "orthogonality") {
    if (size_bound > 6) throw std::domain_error("bound too large for orthogonality");
    rep = suite_orthogonality(size_bound);
  } else if (name == "lemma42-res") {
    if (size_bound > 6) throw std::domain_error("bound too large for lemma42-res");
    rep = suite_lemma42_res(size_bound);
  } else if (name == "lemma42-ind") {
    if (size_bound > 6) throw std::domain_error("bound too large for lemma42-ind");
    rep = suite_lemma42_ind(size_bound);
  } else if (name == "hecke-41") {
    if (size_bound > 5) throw std::domain_error("bound too large for hecke-41");
    rep = suite_hecke_41(size_bound, seed);
  } else if (name == "snf-33") {
    if (size_bound > 4) throw std::domain_error("bound too large for snf-33");
    return snf_fuzz(500, seed, size_bound, 4);
  } else if (name == "telescope-n2") {
    if (size_bound > 12) throw std::domain_error("bound too large for telescope-n2");
    rep = suite_telescope_n2(size_bound, seed);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  rep.suite_name = name;
  rep.size_bound = size_bound;
  rep.seed = seed;
  std::sort(rep.cases.begin(), rep.cases.end(),
            [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
  return rep;
}

}  // namespace greenhall
