#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "stlyap/origami/origami.hpp"

namespace stlyap {

struct QuotientCover {
  Origami quotient;
  std::vector<int> projection;  // square ↦ block
};

namespace detail {

/// Finest r,u-invariant partition identifying the given pairs; blocks are
/// numbered by smallest element.
inline std::vector<int> block_closure(const Origami& o, const std::vector<std::pair<int, int>>& pairs) {
  std::size_t d = o.degree();
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::pair<int, int>> work;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    work.push_back({a, b});
  };
  for (auto [a, b] : pairs) unite(a, b);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    unite(o.r(a), o.r(b));
    unite(o.u(a), o.u(b));
  }
  std::vector<int> label(d), block_of_root(d, -1);
  int next = 0;
  for (std::size_t i = 0; i < d; ++i) {
    int root = find(static_cast<int>(i));
    if (block_of_root[root] == -1) block_of_root[root] = next++;
    label[i] = block_of_root[root];
  }
  return label;
}

inline std::vector<std::pair<int, int>> partition_pairs(const std::vector<int>& labels) {
  std::vector<int> first(labels.size(), -1);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (first[labels[i]] == -1)
      first[labels[i]] = static_cast<int>(i);
    else
      out.push_back({first[labels[i]], static_cast<int>(i)});
  }
  return out;
}

}  // namespace detail

inline Origami quotient_by(const Origami& o, const std::vector<int>& labels) {
  int b = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<int> r(b), u(b);
  for (std::size_t i = 0; i < o.degree(); ++i) {
    r[labels[i]] = labels[o.r(static_cast<int>(i))];
    u[labels[i]] = labels[o.u(static_cast<int>(i))];
  }
  return {Permutation(r), Permutation(u)};
}

/// All nontrivial block systems of ⟨r, u⟩ with their quotient origamis,
/// sorted by block count (descending) then labels. The torus comes last.
inline std::vector<QuotientCover> quotient_covers(const Origami& o) {
  validate(o);
  std::size_t d = o.degree();
  if (d == 1) return {{o, {0}}};
  std::vector<std::vector<int>> minimal;
  for (std::size_t j = 1; j < d; ++j) minimal.push_back(detail::block_closure(o, {{0, static_cast<int>(j)}}));
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> found;
  auto add = [&](std::vector<int> labels) {
    if (seen.emplace(labels, true).second) found.push_back(std::move(labels));
  };
  for (const auto& m : minimal) add(m);
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& m : minimal) {
      auto pairs = detail::partition_pairs(found[k]);
      auto more = detail::partition_pairs(m);
      pairs.insert(pairs.end(), more.begin(), more.end());
      add(detail::block_closure(o, pairs));
    }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    int na = *std::max_element(a.begin(), a.end()), nb = *std::max_element(b.begin(), b.end());
    if (na != nb) return na > nb;
    return a < b;
  });
  std::vector<QuotientCover> out;
  for (auto& labels : found) out.push_back({quotient_by(o, labels), std::move(labels)});
  return out;
}

}  // namespace stlyap
