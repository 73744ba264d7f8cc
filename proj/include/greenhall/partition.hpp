#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace greenhall {

// Integer partition: weakly decreasing positive parts.  Construction sorts
// and strips zeros, so equal partitions always compare equal structurally.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  // Part i (1-based); 0 beyond the stored length.
  int part(int i) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  // Lexicographic on the part vectors; a total order usable as a map key.
  std::strong_ordering operator<=>(const Partition& o) const {
    return parts_ <=> o.parts_;
  }

  Partition conjugate() const;

  // Comma-separated form, e.g. "2,1,1"; the empty partition prints as "".
  std::string str() const;
  // Parses "2,1,1" (or "" for the empty partition).
  static Partition parse_csv(const std::string& s);

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// n(lambda) = sum (i-1)*lambda_i, 1-based.
std::int64_t n_stat(const Partition& lambda);

// Part-size multiplicities {i -> m_i}; absent keys mean zero.
std::map<int, int> multiplicities(const Partition& lambda);

// Multiset union: multiplicities add.
Partition union_partition(const Partition& mu, const Partition& nu);

// Dominance order within one weight class: true iff every partial sum of
// lambda is >= the matching partial sum of mu.  Throws std::invalid_argument
// ("incomparable weights") when the weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions of N in reverse-lexicographic order ((N) first), optionally
// restricted to at most max_length parts.  Throws on negative N.
std::vector<Partition> enumerate_partitions(int N, int max_length = -1);

}  // namespace greenhall
