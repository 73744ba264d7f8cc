#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenhall/partition.hpp"

using namespace greenhall;

namespace {

// Independent oracle: partition counts by the bounded-part recurrence.
long long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
}

}  // namespace

TEST_CASE("construction normalizes") {
  CHECK(Partition({1, 2, 0, 1}) == Partition({2, 1, 1}));
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition({3}).part(2) == 0);
  CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("dominance examples") {
  CHECK(dominance_leq(Partition{1, 1}, Partition{2}));
  CHECK(dominance_leq(Partition{2}, Partition{2}));
  CHECK_FALSE(dominance_leq(Partition{3}, Partition{2, 1}));
  CHECK_THROWS_WITH(dominance_leq(Partition{1}, Partition{2}), "incomparable weights");
}

TEST_CASE("n_stat examples") {
  CHECK(n_stat(Partition{}) == 0);
  CHECK(n_stat(Partition{2}) == 0);
  CHECK(n_stat(Partition{1, 1}) == 1);
  CHECK(n_stat(Partition{2, 2, 1}) == 4);
}

TEST_CASE("multiplicities and union") {
  auto m = multiplicities(Partition{2, 1, 1});
  CHECK(m[1] == 2);
  CHECK(m[2] == 1);
  CHECK(multiplicities(Partition{3}).at(3) == 1);
  CHECK(multiplicities(Partition{}).empty());

  CHECK(union_partition(Partition{2, 1}, Partition{1}) == Partition{2, 1, 1});
  CHECK(union_partition(Partition{}, Partition{3}) == Partition{3});
  CHECK(union_partition(Partition{2, 2}, Partition{2}) == Partition{2, 2, 2});
}

TEST_CASE("enumeration order and counts") {
  auto p0 = enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == Partition{});

  CHECK(enumerate_partitions(5).size() == 7);
  auto p4 = enumerate_partitions(4, 2);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});

  for (int n = 0; n <= 10; ++n) {
    CHECK(static_cast<long long>(enumerate_partitions(n).size()) ==
          partition_count(n, n));
  }
  CHECK_THROWS(enumerate_partitions(-1));
}

TEST_CASE("enumeration has no duplicates and correct weights") {
  for (int n = 0; n <= 9; ++n) {
    auto ps = enumerate_partitions(n);
    for (size_t i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].weight() == n);
      for (size_t j = i + 1; j < ps.size(); ++j) CHECK(ps[i] != ps[j]);
    }
  }
}

TEST_CASE("dominance is a partial order on each weight class") {
  for (int n = 1; n <= 8; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : ps) {
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("n_stat is antitone for dominance; union adds weights") {
  for (int n = 1; n <= 8; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& mu : ps) {
      for (const auto& lam : ps) {
        if (dominance_leq(mu, lam)) CHECK(n_stat(lam) <= n_stat(mu));
      }
    }
  }
  CHECK(union_partition(Partition{3, 1}, Partition{2, 2}).weight() == 8);
}

TEST_CASE("csv parsing round trip") {
  CHECK(Partition::parse_csv("2,1,1") == Partition{2, 1, 1});
  CHECK(Partition::parse_csv("") == Partition{});
  CHECK(Partition::parse_csv("4").str() == "4");
  CHECK_THROWS(Partition::parse_csv("2,x"));
}
