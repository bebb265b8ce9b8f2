#pragma once

#include <vector>

#include "stlyap/exact/symplectic.hpp"
#include "stlyap/origami/origami.hpp"

namespace stlyap {

/// Edges: 2i is the x-edge i → r(i), 2i+1 the y-edge i → u(i).
struct SpanningTreeData {
  Origami origami;
  std::vector<bool> in_tree;         // per edge
  std::vector<FreeWord> path;        // tree path from square 0 to each square
  std::vector<int> nontree;          // edge ids: x-edges ascending, then y-edges
  std::vector<int> nontree_index;    // per edge, -1 for tree edges
  std::vector<int> depth;

  std::size_t degree() const { return origami.degree(); }
  std::size_t rank() const { return nontree.size(); }

  static int tail(int e) { return e / 2; }
  int head(int e) const { return e % 2 == 0 ? origami.r(e / 2) : origami.u(e / 2); }
  static int letter(int e) { return e % 2 == 0 ? 1 : 2; }
};

inline SpanningTreeData graph_and_tree(const Origami& o) {
  validate(o);
  std::size_t d = o.degree();
  SpanningTreeData t;
  t.origami = o;
  t.in_tree.assign(2 * d, false);
  t.path.assign(d, FreeWord{});
  t.depth.assign(d, -1);
  Permutation ri = o.r.inverse(), ui = o.u.inverse();
  std::vector<int> queue{0};
  t.depth[0] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int i = queue[k];
    // (neighbor, edge, letter): x-out, x-in, y-out, y-in
    const int nbs[4][3] = {{o.r(i), 2 * i, 1}, {ri(i), 2 * ri(i), -1}, {o.u(i), 2 * i + 1, 2}, {ui(i), 2 * ui(i) + 1, -2}};
    for (const auto& nb : nbs) {
      if (t.depth[nb[0]] != -1) continue;
      t.depth[nb[0]] = t.depth[i] + 1;
      t.in_tree[nb[1]] = true;
      t.path[nb[0]] = t.path[i] * FreeWord({nb[2]});
      queue.push_back(nb[0]);
    }
  }
  t.nontree_index.assign(2 * d, -1);
  for (int parity : {0, 1})
    for (std::size_t i = 0; i < d; ++i) {
      int e = static_cast<int>(2 * i) + parity;
      if (t.in_tree[e]) continue;
      t.nontree_index[e] = static_cast<int>(t.nontree.size());
      t.nontree.push_back(e);
    }
  return t;
}

/// u_k = path(tail)·letter·path(head)⁻¹ for each non-tree edge.
inline std::vector<FreeWord> h_generators(const SpanningTreeData& t) {
  std::vector<FreeWord> out;
  for (int e : t.nontree)
    out.push_back(t.path[SpanningTreeData::tail(e)] * FreeWord({SpanningTreeData::letter(e)}) *
                  t.path[t.head(e)].inverse());
  return out;
}

/// Signed multiplicity of each of the 2d edges along a word traced from `start`.
inline std::vector<long long> edge_counts(const SpanningTreeData& t, const FreeWord& w, int start = 0,
                                          int* end = nullptr) {
  const Origami& o = t.origami;
  Permutation ri = o.r.inverse(), ui = o.u.inverse();
  std::vector<long long> c(2 * t.degree(), 0);
  int p = start;
  for (int l : w.letters()) {
    switch (l) {
      case 1: c[2 * p] += 1; p = o.r(p); break;
      case -1: p = ri(p); c[2 * p] -= 1; break;
      case 2: c[2 * p + 1] += 1; p = o.u(p); break;
      default: p = ui(p); c[2 * p + 1] -= 1; break;
    }
  }
  if (end) *end = p;
  return c;
}

/// Algebraic intersection of two edge chains (cycles). One cycle is pushed
/// off diagonally; the x-edge at i then meets the pushed y-edge at u⁻¹(i)
/// positively and the y-edge at i meets the pushed x-edge at r⁻¹(i)
/// negatively.
inline long long chain_intersection(const Origami& o, const std::vector<long long>& a, const std::vector<long long>& b) {
  Permutation ri = o.r.inverse(), ui = o.u.inverse();
  long long s = 0;
  for (std::size_t i = 0; i < o.degree(); ++i) {
    int ii = static_cast<int>(i);
    s += a[2 * i] * b[2 * ui(ii) + 1];
    s -= a[2 * i + 1] * b[2 * ri(ii)];
  }
  return s;
}

/// Intersection form on the fundamental cycles t_1, …, t_{d+1}.
inline AlternatingForm intersection_gram(const SpanningTreeData& t) {
  auto gens = h_generators(t);
  std::vector<std::vector<long long>> chains;
  for (const auto& g : gens) chains.push_back(edge_counts(t, g));
  std::size_t n = gens.size();
  MatZ g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = chain_intersection(t.origami, chains[i], chains[j]);
  AlternatingForm f(g);
  std::size_t m = vertex_permutation(t.origami).cycle_count();
  std::size_t radical = n - rank(to_rational(g));
  if (radical != m - 1)
    fail(ErrorKind::RadicalDimensionMismatch, "intersection form has radical of dimension " +
                                                  std::to_string(radical) + ", expected " + std::to_string(m - 1));
  return f;
}

}  // namespace stlyap
