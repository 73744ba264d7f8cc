#include "greenhall/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenhall {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("negative part in partition");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.resize(parts_[0], 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) c[j]++;
    }
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse_csv(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("malformed partition: " + s);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::int64_t n_stat(const Partition& lambda) {
  std::int64_t acc = 0;
  const auto& ps = lambda.parts();
  for (size_t i = 0; i < ps.size(); ++i) acc += static_cast<std::int64_t>(i) * ps[i];
  return acc;
}

std::map<int, int> multiplicities(const Partition& lambda) {
  std::map<int, int> m;
  for (int p : lambda.parts()) m[p]++;
  return m;
}

Partition union_partition(const Partition& mu, const Partition& nu) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw std::invalid_argument("incomparable weights");
  }
  int len = std::max(mu.length(), lambda.length());
  long sum_mu = 0, sum_lambda = 0;
  for (int i = 1; i <= len; ++i) {
    sum_mu += mu.part(i);
    sum_lambda += lambda.part(i);
    if (sum_lambda < sum_mu) return false;
  }
  return true;
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots_left, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (slots_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_rec(remaining - p, p, slots_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int N, int max_length) {
  if (N < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  int slots = max_length < 0 ? N : std::min(max_length, N);
  if (N == 0) {
    out.emplace_back();
    return out;
  }
  enumerate_rec(N, N, slots, acc, out);
  return out;
}

}  // namespace greenhall
