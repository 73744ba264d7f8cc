#pragma once

#include <random>
#include <string>
#include <vector>

#include "greenhall/dvr.hpp"
#include "greenhall/rational.hpp"

namespace greenhall {

struct SuiteCase {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  long long elapsed_us = 0;
};

struct SuiteReport {
  std::string suite_name;
  int size_bound = 0;
  unsigned long seed = 0;
  std::vector<SuiteCase> cases;  // sorted by id

  int total() const { return static_cast<int>(cases.size()); }
  int passed() const;
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

// Known suites: kostka-len2, orthogonality, lemma42-res, lemma42-ind,
// hecke-41, snf-33, telescope-n2.
const std::vector<std::string>& suite_names();

// Runs one identity suite over its exhaustive grid up to size_bound; the
// seed only feeds eigenvalue / fuzz generation.  Unknown names throw
// std::invalid_argument, oversized bounds std::domain_error.
SuiteReport run_identity_suite(const std::string& name, int size_bound,
                               unsigned long seed);

// Small nonzero rational for seeded draws (numerator in [-6,6], denominator
// in [1,3]).
Rational random_nonzero_rational(std::mt19937_64& rng);

// Random spec satisfying the conformance inequalities, entries <= max_val.
ValuationMatrixSpec random_conforming_spec(std::mt19937_64& rng, int max_size,
                                           int max_val);

// Oracle comparison over `count` random conforming specs; used by both the
// snf-33 suite (count = 500) and the snf-fuzz CLI.
SuiteReport snf_fuzz(int count, unsigned long seed, int max_size, int max_val);

}  // namespace greenhall
