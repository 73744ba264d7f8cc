#include "greenhall/kostka.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace greenhall {

Partition Tableau::shape() const {
  std::vector<int> s;
  s.reserve(rows.size());
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return Partition(std::move(s));
}

Partition Tableau::weight() const {
  std::map<int, int> mult;
  for (const auto& r : rows) {
    for (int v : r) mult[v]++;
  }
  int max_letter = mult.empty() ? 0 : mult.rbegin()->first;
  std::vector<int> w(max_letter, 0);
  for (const auto& [letter, m] : mult) w[letter - 1] = m;
  return Partition(std::move(w));
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows) {
    for (auto it = r.rbegin(); it != r.rend(); ++it) w.push_back(*it);
  }
  return w;
}

bool Tableau::is_semistandard() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j + 1 < rows[i].size(); ++j) {
      if (rows[i][j] > rows[i][j + 1]) return false;
    }
    if (i + 1 < rows.size()) {
      if (rows[i + 1].size() > rows[i].size()) return false;
      for (size_t j = 0; j < rows[i + 1].size(); ++j) {
        if (rows[i + 1][j] <= rows[i][j]) return false;
      }
    }
  }
  return true;
}

namespace {

// Builds tableaux by placing the letters 1..l(weight) as successive
// horizontal strips growing the empty shape into `shape`.
void fill_letter(const Partition& shape, const Partition& weight, int letter,
                 std::vector<int>& current, std::vector<Tableau>& out,
                 std::vector<std::vector<int>>& rows) {
  if (letter > weight.length()) {
    if (Partition(current) == shape) {
      Tableau t;
      t.rows = rows;
      // Drop empty rows.
      while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
      out.push_back(std::move(t));
    }
    return;
  }
  int need = weight.part(letter);
  int nrows = shape.length();
  // Choose how many copies of `letter` go in each row, top to bottom, under
  // the horizontal-strip condition: new row length <= previous row's old
  // length, and within the target shape.
  std::vector<int> add(nrows, 0);
  // Recursive distribution over rows.
  auto place = [&](auto&& self, int row, int remaining) -> void {
    if (row == nrows) {
      if (remaining != 0) return;
      std::vector<int> next = current;
      for (int r = 0; r < nrows; ++r) {
        next[r] += add[r];
        for (int k = 0; k < add[r]; ++k) rows[r].push_back(letter);
      }
      fill_letter(shape, weight, letter + 1, next, out, rows);
      for (int r = 0; r < nrows; ++r) {
        for (int k = 0; k < add[r]; ++k) rows[r].pop_back();
      }
      return;
    }
    int old_len = current[row];
    int cap = std::min(shape.part(row + 1) - old_len,
                       row == 0 ? remaining : current[row - 1] - old_len);
    cap = std::min(cap, remaining);
    for (int a = 0; a <= cap; ++a) {
      add[row] = a;
      self(self, row + 1, remaining - a);
    }
    add[row] = 0;
  };
  place(place, 0, need);
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& weight) {
  std::vector<Tableau> out;
  if (shape.weight() != weight.weight()) return out;
  if (shape.empty()) {
    out.push_back(Tableau{});
    return out;
  }
  std::vector<int> current(shape.length(), 0);
  std::vector<std::vector<int>> rows(shape.length());
  fill_letter(shape, weight, 1, current, out, rows);
  return out;
}

int charge(const std::vector<int>& word) {
  std::map<int, int> mult;
  for (int v : word) {
    if (v < 1) throw std::invalid_argument("letters must be positive");
    mult[v]++;
  }
  int max_letter = mult.empty() ? 0 : mult.rbegin()->first;
  for (int i = 1; i + 1 <= max_letter; ++i) {
    if (mult[i] < mult[i + 1]) throw std::invalid_argument("non-partition content");
  }
  if (max_letter > 0 && mult[1] == 0) throw std::invalid_argument("non-partition content");

  int n = static_cast<int>(word.size());
  std::vector<bool> used(n, false);
  int total = 0;
  int remaining = n;
  std::vector<int> remaining_mult(max_letter + 1, 0);
  for (int v : word) remaining_mult[v]++;
  while (remaining > 0) {
    int top = max_letter;
    while (top >= 1 && remaining_mult[top] == 0) --top;
    // Rightmost unused 1.
    int pos = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (!used[i] && word[i] == 1) {
        pos = i;
        break;
      }
    }
    used[pos] = true;
    remaining_mult[1]--;
    remaining--;
    int index = 0;
    for (int letter = 2; letter <= top; ++letter) {
      // First occurrence scanning right-to-left from pos, cyclically.
      int found = -1;
      for (int step = 1; step <= n; ++step) {
        int i = (pos - step % n + n) % n;
        if (!used[i] && word[i] == letter) {
          found = i;
          break;
        }
      }
      if (found < pos) index++;
      used[found] = true;
      remaining_mult[letter]--;
      remaining--;
      total += index;
      pos = found;
    }
  }
  return total;
}

LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return LaurentPoly();
  if (!lambda.empty() && !dominance_leq(mu, lambda)) return LaurentPoly();
  LaurentPoly k;
  for (const Tableau& t : enumerate_ssyt(lambda, mu)) {
    k += LaurentPoly::monomial(Rational(1), charge(t.reading_word()));
  }
  return k;
}

LaurentPoly kostka_tilde(const Partition& lambda, const Partition& mu) {
  return kostka_foulkes(lambda, mu).reverse_tilde(n_stat(mu));
}

}  // namespace greenhall
