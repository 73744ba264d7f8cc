#pragma once

#include <vector>

#include "greenhall/laurent.hpp"
#include "greenhall/partition.hpp"

namespace greenhall {

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase, letter i occurs weight_i times.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  Partition weight() const;
  // Row reading word: each row right to left, top row first.
  std::vector<int> reading_word() const;
  bool is_semistandard() const;
};

// All semistandard tableaux of the given shape and weight.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& weight);

// Lascoux-Schutzenberger charge of a word with partition content (letter i
// occurs at least as often as letter i+1).  Standard subwords are extracted
// by the cyclic right-to-left scan; within a subword the index is bumped
// exactly when the next letter sits to the left of the previous one.
// Throws std::invalid_argument on non-partition content.
int charge(const std::vector<int>& word);

// Kostka-Foulkes polynomial: sum of t^charge over SSYT of shape lambda and
// weight mu.  Zero when the weights differ or lambda does not dominate mu.
LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

// Modified polynomial t^{n(mu)} K_{lambda,mu}(1/t).
LaurentPoly kostka_tilde(const Partition& lambda, const Partition& mu);

}  // namespace greenhall
