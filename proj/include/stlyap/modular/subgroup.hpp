#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stlyap/exact/permutation.hpp"
#include "stlyap/modular/sl2.hpp"

namespace stlyap {

struct CuspClass {
  int rep_coset = 0;
  WordST rep_word;       // g, the cusp is g·∞
  long long width = 1;   // projective
  Mat2Z g;
  Mat2Z parabolic;       // g·T^w·g⁻¹
  WordST parabolic_word;
  bool at_infinity = true;
  Rational point;        // g·∞ when finite
};

struct SchreierGenerator {
  int coset;   // edge start
  int letter;  // 1 = S, 2 = T
  WordST word;
  Mat2Z matrix;
};

/// (generator index, ±1)
using SchreierLetter = std::pair<int, int>;

struct SchreierRewrite {
  std::vector<SchreierLetter> letters;
  int sign = 1;  // product of the letters equals sign·m
};

/// Finite-index subgroup of PSL₂(ℤ) given by the right action of S and T on
/// its cosets, coset 0 being the subgroup itself.
class ModularSubgroup {
 public:
  /// The full modular group.
  ModularSubgroup() : ModularSubgroup(from_action(Permutation::identity(1), Permutation::identity(1))) {}

  /// Standardizes numbering by breadth-first search from `base` in the order
  /// S, T, T⁻¹. `relabel`, if given, receives old → new coset numbers.
  static ModularSubgroup from_action(const Permutation& sigma_S, const Permutation& sigma_T, int base = 0,
                                     std::vector<int>* relabel = nullptr) {
    std::size_t n = sigma_S.degree();
    if (n == 0 || sigma_T.degree() != n) fail(ErrorKind::InvalidInput, "coset action: degree mismatch");
    if (!compose(sigma_S, sigma_S).is_identity())
      fail(ErrorKind::InvalidInput, "coset action violates S^2 = 1");
    if (!power(compose(sigma_T, sigma_S), 3).is_identity())
      fail(ErrorKind::InvalidInput, "coset action violates (ST)^3 = 1");
    if (!is_transitive({sigma_S, sigma_T})) fail(ErrorKind::InvalidInput, "coset action is not transitive");

    Permutation t_inv = sigma_T.inverse();
    std::vector<int> order{base}, new_of(n, -1), parent_letter(n, 0), parent(n, -1);
    new_of[base] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      int c = order[k];
      for (int l : {1, 2, -2}) {
        int nb = l == 1 ? sigma_S(c) : l == 2 ? sigma_T(c) : t_inv(c);
        if (new_of[nb] != -1) continue;
        new_of[nb] = static_cast<int>(order.size());
        parent[nb] = c;
        parent_letter[nb] = l;
        order.push_back(nb);
      }
    }
    ModularSubgroup g(Raw{});
    g.n_ = n;
    std::vector<int> s(n), t(n);
    for (std::size_t c = 0; c < n; ++c) {
      s[new_of[c]] = new_of[sigma_S(static_cast<int>(c))];
      t[new_of[c]] = new_of[sigma_T(static_cast<int>(c))];
    }
    g.sigma_S_ = Permutation(std::move(s));
    g.sigma_T_ = Permutation(std::move(t));
    g.rep_words_.assign(n, WordST{});
    g.tree_letter_.assign(n, 0);
    g.tree_parent_.assign(n, -1);
    for (std::size_t k = 1; k < n; ++k) {
      int old = order[k];
      int p = new_of[parent[old]];
      g.tree_parent_[k] = p;
      g.tree_letter_[k] = parent_letter[old];
      g.rep_words_[k] = g.rep_words_[p] * WordST({parent_letter[old]});
    }
    g.build_schreier();
    if (relabel) *relabel = std::move(new_of);
    return g;
  }

  std::size_t index() const noexcept { return n_; }
  const Permutation& sigma_S() const noexcept { return sigma_S_; }
  const Permutation& sigma_T() const noexcept { return sigma_T_; }
  const std::vector<WordST>& rep_words() const noexcept { return rep_words_; }
  const std::vector<SchreierGenerator>& schreier_generators() const noexcept { return gens_; }
  const std::vector<WordST>& caller_generators() const noexcept { return caller_; }
  void set_caller_generators(std::vector<WordST> words) { caller_ = std::move(words); }

  int act(int c, int letter) const {
    switch (letter) {
      case 1:
      case -1: return sigma_S_(c);
      case 2: return sigma_T_(c);
      default: return sigma_T_inv_(c);
    }
  }

  int trace(int c, const WordST& w) const {
    for (int l : w.letters()) c = act(c, l);
    return c;
  }

  bool contains(const WordST& w) const { return trace(0, w) == 0; }
  bool contains(const Mat2Z& m) const { return contains(matrix_to_word(m)); }

  /// Schreier letters collected along w traced from coset c (no reduction).
  std::vector<SchreierLetter> schreier_path(int c, const WordST& w, int* end = nullptr) const {
    std::vector<SchreierLetter> out;
    for (int l : w.letters()) {
      int next = act(c, l);
      if (l == 1 || l == -1) {
        int lo = std::min(c, next);
        if (s_gen_[lo] >= 0) out.push_back({s_gen_[lo], c <= next ? 1 : -1});
      } else if (l == 2) {
        if (t_gen_[c] >= 0) out.push_back({t_gen_[c], 1});
      } else {
        if (t_gen_[next] >= 0) out.push_back({t_gen_[next], -1});
      }
      c = next;
    }
    if (end) *end = c;
    return out;
  }

  Mat2Z evaluate(const std::vector<SchreierLetter>& letters) const {
    Mat2Z m;
    for (auto [k, e] : letters) m = m * (e > 0 ? gens_[k].matrix : gens_[k].matrix.inverse());
    return m;
  }

  SchreierRewrite rewrite(const WordST& w) const {
    int end = 0;
    auto raw = schreier_path(0, w, &end);
    if (end != 0) fail(ErrorKind::NotAMember, "word " + w.to_string() + " does not lie in the subgroup");
    SchreierRewrite r;
    for (auto le : raw) {
      if (!r.letters.empty() && r.letters.back().first == le.first && r.letters.back().second == -le.second)
        r.letters.pop_back();
      else
        r.letters.push_back(le);
    }
    Mat2Z prod = evaluate(r.letters), target = word_to_matrix(w);
    r.sign = prod == target ? 1 : -1;
    if (prod != target && prod != -target) fail(ErrorKind::NotAMember, "rewrite product mismatch");
    return r;
  }

  SchreierRewrite rewrite(const Mat2Z& m) const {
    auto r = rewrite(matrix_to_word(m));
    return r;
  }

  /// Reidemeister–Schreier relators: S² and (ST)³ traced from every coset.
  std::vector<std::vector<SchreierLetter>> relators() const {
    static const WordST s2({1, 1});
    static const WordST st3({1, 2, 1, 2, 1, 2});
    std::vector<std::vector<SchreierLetter>> out;
    for (std::size_t c = 0; c < n_; ++c) {
      out.push_back(schreier_path(static_cast<int>(c), s2));
      out.push_back(schreier_path(static_cast<int>(c), st3));
    }
    return out;
  }

  std::vector<CuspClass> cusps() const {
    std::vector<CuspClass> out;
    std::vector<bool> seen(n_, false);
    for (std::size_t c = 0; c < n_; ++c) {
      if (seen[c]) continue;
      long long w = 0;
      for (int p = static_cast<int>(c); !seen[p]; p = sigma_T_(p)) {
        seen[p] = true;
        ++w;
      }
      CuspClass cc;
      cc.rep_coset = static_cast<int>(c);
      cc.rep_word = rep_words_[c];
      cc.width = w;
      cc.g = word_to_matrix(cc.rep_word);
      cc.parabolic_word = cc.rep_word * WordST::T_power(w) * cc.rep_word.inverse();
      cc.parabolic = word_to_matrix(cc.parabolic_word);
      cc.at_infinity = cc.g.c == 0;
      if (!cc.at_infinity) cc.point = make_rational(cc.g.a, cc.g.c);
      out.push_back(std::move(cc));
    }
    return out;
  }

  /// σ_T-orbit number of each coset, in the numbering used by cusps().
  std::vector<int> cusp_of_coset() const {
    std::vector<int> id(n_, -1);
    int next = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (id[c] != -1) continue;
      for (int p = static_cast<int>(c); id[p] == -1; p = sigma_T_(p)) id[p] = next;
      ++next;
    }
    return id;
  }

  friend bool operator==(const ModularSubgroup& a, const ModularSubgroup& b) {
    return a.sigma_S_ == b.sigma_S_ && a.sigma_T_ == b.sigma_T_;
  }

 private:
  struct Raw {};
  explicit ModularSubgroup(Raw) {}

  void build_schreier() {
    sigma_T_inv_ = sigma_T_.inverse();
    s_gen_.assign(n_, -1);
    t_gen_.assign(n_, -1);
    auto is_tree = [&](int from, int letter, int to) {
      if (letter == 1)
        return (tree_parent_[to] == from && tree_letter_[to] == 1) ||
               (tree_parent_[from] == to && tree_letter_[from] == 1);
      return (tree_parent_[to] == from && tree_letter_[to] == 2) ||
             (tree_parent_[from] == to && tree_letter_[from] == -2);
    };
    for (std::size_t ci = 0; ci < n_; ++ci) {
      int c = static_cast<int>(ci);
      int cs = sigma_S_(c);
      if (cs >= c && !is_tree(c, 1, cs)) add_gen(c, 1, cs);
      int ct = sigma_T_(c);
      if (!is_tree(c, 2, ct)) add_gen(c, 2, ct);
    }
  }

  void add_gen(int c, int letter, int to) {
    SchreierGenerator g;
    g.coset = c;
    g.letter = letter;
    g.word = rep_words_[c] * WordST({letter}) * rep_words_[to].inverse();
    g.matrix = word_to_matrix(g.word);
    (letter == 1 ? s_gen_ : t_gen_)[c] = static_cast<int>(gens_.size());
    gens_.push_back(std::move(g));
  }

  std::size_t n_ = 1;
  Permutation sigma_S_, sigma_T_, sigma_T_inv_;
  std::vector<WordST> rep_words_;
  std::vector<int> tree_parent_, tree_letter_;
  std::vector<SchreierGenerator> gens_;
  std::vector<int> s_gen_, t_gen_;
  std::vector<WordST> caller_;
};

template <typename State>
struct OrbitAction {
  std::vector<State> states;  // indexed by coset after standardization
  ModularSubgroup subgroup;
};

/// Breadth-first orbit of `start` under a right action of S and T. States are
/// identified through `key`; the resulting coset table is standardized.
template <typename State, typename ActS, typename ActT, typename KeyFn>
OrbitAction<State> orbit_subgroup(const State& start, ActS act_s, ActT act_t, KeyFn key, std::size_t max_orbit,
                                  ErrorKind overflow = ErrorKind::OrbitOverflow) {
  using Key = decltype(key(start));
  std::map<Key, int> index;
  std::vector<State> states{start};
  index.emplace(key(start), 0);
  std::vector<int> s_img, t_img;
  auto lookup = [&](State&& st) {
    auto k = key(st);
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    if (states.size() >= max_orbit)
      fail(overflow, "orbit exceeds the limit of " + std::to_string(max_orbit) + " elements");
    int id = static_cast<int>(states.size());
    index.emplace(std::move(k), id);
    states.push_back(std::move(st));
    return id;
  };
  for (std::size_t i = 0; i < states.size(); ++i) {
    int a = lookup(act_s(states[i]));
    int b = lookup(act_t(states[i]));
    s_img.push_back(a);
    t_img.push_back(b);
  }
  std::vector<int> relabel;
  OrbitAction<State> out;
  out.subgroup = ModularSubgroup::from_action(Permutation(s_img), Permutation(t_img), 0, &relabel);
  out.states.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) out.states[relabel[i]] = std::move(states[i]);
  return out;
}

inline ModularSubgroup intersect(const ModularSubgroup& g1, const ModularSubgroup& g2,
                                 std::size_t max_cosets = 1000000) {
  using P = std::pair<int, int>;
  auto res = orbit_subgroup(
      P{0, 0}, [&](const P& p) { return P{g1.sigma_S()(p.first), g2.sigma_S()(p.second)}; },
      [&](const P& p) { return P{g1.sigma_T()(p.first), g2.sigma_T()(p.second)}; }, [](const P& p) { return p; },
      max_cosets, ErrorKind::EnumerationOverflow);
  return res.subgroup;
}

/// Is every element of `sub` contained in `g`?
inline bool is_subgroup_of(const ModularSubgroup& sub, const ModularSubgroup& g) {
  for (const auto& s : sub.schreier_generators())
    if (!g.contains(s.word)) return false;
  return true;
}

}  // namespace stlyap
