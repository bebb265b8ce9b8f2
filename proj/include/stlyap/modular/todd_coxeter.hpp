#pragma once

#include <array>
#include <deque>
#include <string>
#include <vector>

#include "stlyap/modular/subgroup.hpp"

namespace stlyap {

namespace detail {

// Columns: 0 = s (self-inverse), 1 = t, 2 = t⁻¹.
class CosetTable {
 public:
  explicit CosetTable(std::size_t max_cosets) : max_(max_cosets) { new_coset(); }

  static int inv(int x) { return x == 0 ? 0 : 3 - x; }

  bool alive(int c) const { return parent_[c] == c; }
  std::size_t size() const { return table_.size(); }
  int entry(int c, int x) const { return table_[c][x]; }

  int find(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] != -1) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] != -1) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < 3; ++x) {
        int f = table_[e][x];
        if (f == -1) continue;
        table_[f][inv(x)] = -1;
        int e1 = find(e), f1 = find(f);
        if (table_[e1][x] != -1)
          merge(f1, table_[e1][x], queue);
        else if (table_[f1][inv(x)] != -1)
          merge(e1, table_[f1][inv(x)], queue);
        else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

 private:
  int new_coset() {
    if (table_.size() >= max_)
      fail(ErrorKind::EnumerationOverflow,
           "coset enumeration exceeded " + std::to_string(max_) + " cosets (infinite index or thin subgroup?)");
    table_.push_back({-1, -1, -1});
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = find(k);
    l = find(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  std::size_t max_;
  std::vector<std::array<int, 3>> table_;
  std::vector<int> parent_;
};

inline std::vector<int> to_columns(const WordST& w) {
  std::vector<int> out;
  for (int l : w.letters()) out.push_back(l == 1 || l == -1 ? 0 : l == 2 ? 1 : 2);
  return out;
}

}  // namespace detail

constexpr std::size_t default_max_cosets = 1000000;

/// HLT coset enumeration over ⟨s, t | s², (st)³⟩ for the subgroup generated
/// projectively by the given words.
inline ModularSubgroup coset_enumerate(const std::vector<WordST>& generators,
                                       std::size_t max_cosets = default_max_cosets) {
  if (generators.empty()) fail(ErrorKind::InvalidInput, "coset_enumerate needs at least one generator");
  detail::CosetTable tab(max_cosets);
  const std::vector<std::vector<int>> relators{{0, 0}, {0, 1, 0, 1, 0, 1}};
  for (const auto& g : generators) tab.scan_and_fill(0, detail::to_columns(g));
  for (std::size_t c = 0; c < tab.size(); ++c) {
    int ci = static_cast<int>(c);
    for (const auto& r : relators) {
      if (!tab.alive(ci)) break;
      tab.scan_and_fill(ci, r);
    }
    for (int x = 0; x < 3 && tab.alive(ci); ++x)
      if (tab.entry(ci, x) == -1) tab.define(ci, x);
  }
  std::vector<int> live_id(tab.size(), -1);
  int n = 0;
  for (std::size_t c = 0; c < tab.size(); ++c)
    if (tab.alive(static_cast<int>(c))) live_id[c] = n++;
  std::vector<int> s(n), t(n);
  for (std::size_t c = 0; c < tab.size(); ++c) {
    int ci = static_cast<int>(c);
    if (!tab.alive(ci)) continue;
    s[live_id[c]] = live_id[tab.find(tab.entry(ci, 0))];
    t[live_id[c]] = live_id[tab.find(tab.entry(ci, 1))];
  }
  auto g = ModularSubgroup::from_action(Permutation(std::move(s)), Permutation(std::move(t)));
  g.set_caller_generators(generators);
  return g;
}

}  // namespace stlyap
