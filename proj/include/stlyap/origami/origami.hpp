#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "stlyap/exact/free_word.hpp"
#include "stlyap/exact/permutation.hpp"
#include "stlyap/modular/sl2.hpp"

namespace stlyap {

struct Origami {
  Permutation r, u;

  Origami() : r(Permutation::identity(1)), u(Permutation::identity(1)) {}
  Origami(Permutation r_, Permutation u_) : r(std::move(r_)), u(std::move(u_)) {
    if (r.degree() != u.degree()) fail(ErrorKind::DegreeMismatch, "r and u have different degree");
    if (r.degree() == 0) fail(ErrorKind::InvalidInput, "origami needs at least one square");
  }

  std::size_t degree() const { return r.degree(); }

  friend bool operator==(const Origami&, const Origami&) = default;
  friend auto operator<=>(const Origami& a, const Origami& b) {
    if (auto c = a.r <=> b.r; c != 0) return c;
    return a.u <=> b.u;
  }

  std::string to_string() const { return "r=" + r.to_string() + "; u=" + u.to_string(); }
};

inline void validate(const Origami& o) {
  if (!is_transitive({o.r, o.u}))
    fail(ErrorKind::NotConnected, "<r, u> does not act transitively on the squares");
}

/// Commutator r·u·r⁻¹·u⁻¹; its cycles are the vertices.
inline Permutation vertex_permutation(const Origami& o) {
  return compose(o.r, compose(o.u, compose(o.r.inverse(), o.u.inverse())));
}

struct StratumData {
  int genus = 1;
  std::vector<int> kappa;               // zero orders, descending
  std::vector<int> vertex_cycle_lengths;  // descending
  int punctures = 1;                    // every vertex is marked
};

inline StratumData stratum(const Origami& o) {
  validate(o);
  StratumData s;
  auto cycles = vertex_permutation(o).cycles();
  for (const auto& c : cycles) {
    s.vertex_cycle_lengths.push_back(static_cast<int>(c.size()));
    if (c.size() > 1) s.kappa.push_back(static_cast<int>(c.size()) - 1);
  }
  std::sort(s.kappa.rbegin(), s.kappa.rend());
  std::sort(s.vertex_cycle_lengths.rbegin(), s.vertex_cycle_lengths.rend());
  s.punctures = static_cast<int>(cycles.size());
  long long euler = static_cast<long long>(cycles.size()) - static_cast<long long>(o.degree());
  s.genus = static_cast<int>((2 - euler) / 2);
  return s;
}

/// Action of a single generator: the monodromy is precomposed with the
/// inverse of the fixed lift (x ↦ x, y ↦ yx for T; x ↦ y, y ↦ x⁻¹ for S).
inline Origami act_generator(int gen, const Origami& o) {
  switch (gen) {
    case 2: return {o.r, compose(o.r.inverse(), o.u)};
    case -2: return {o.r, compose(o.r, o.u)};
    case 1: return {o.u.inverse(), o.r};
    case -1: return {o.u, o.r.inverse()};
    default: fail(ErrorKind::InvalidInput, "generator must be one of S, T and their inverses");
  }
}

/// w·O, the rightmost letter acting first.
inline Origami act_word(const WordST& w, Origami o) {
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) o = act_generator(*it, o);
  return o;
}

inline Origami minus_identity_action(const Origami& o) { return {o.r.inverse(), o.u.inverse()}; }

/// Lexicographically least relabeling among the breadth-first labelings
/// (neighbors r then u) started at each square.
inline Origami canonical_form(const Origami& o) {
  std::size_t d = o.degree();
  std::vector<int> best_r, best_u;
  std::vector<int> label(d), order(d), nr(d), nu(d);
  for (std::size_t s = 0; s < d; ++s) {
    std::fill(label.begin(), label.end(), -1);
    label[s] = 0;
    order[0] = static_cast<int>(s);
    std::size_t filled = 1;
    for (std::size_t k = 0; k < filled; ++k) {
      for (int nb : {o.r(order[k]), o.u(order[k])}) {
        if (label[nb] != -1) continue;
        label[nb] = static_cast<int>(filled);
        order[filled++] = nb;
      }
    }
    if (filled != d) fail(ErrorKind::NotConnected, "canonical_form needs a connected origami");
    for (std::size_t k = 0; k < d; ++k) {
      nr[k] = label[o.r(order[k])];
      nu[k] = label[o.u(order[k])];
    }
    if (best_r.empty() || std::tie(nr, nu) < std::tie(best_r, best_u)) {
      best_r = nr;
      best_u = nu;
    }
  }
  return {Permutation(best_r), Permutation(best_u)};
}

inline bool equivalent(const Origami& a, const Origami& b) {
  return a.degree() == b.degree() && canonical_form(a) == canonical_form(b);
}

/// Parses "(1,4,7)(2,3,5,6,8,9)" (1-based) into 0-based cycles.
inline std::vector<std::vector<int>> parse_cycle_string(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::InvalidInput, "expected '(' in cycle notation: '" + text + "'");
    ++i;
    std::vector<int> c;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail(ErrorKind::InvalidInput, "expected a point in cycle notation: '" + text + "'");
      int v = std::stoi(text.substr(start, i - start));
      if (v < 1) fail(ErrorKind::InvalidInput, "points are 1-based");
      c.push_back(v - 1);
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    cycles.push_back(std::move(c));
    skip();
  }
  return cycles;
}

/// "r=(1,4,7)(2,3,5,6,8,9); u=(1,6,8,7,3,2)(4,9,5)"; degree is the largest
/// point unless given.
inline Origami parse_origami_text(const std::string& text, std::size_t degree = 0) {
  auto field = [&](char name) {
    std::size_t pos = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != name) continue;
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '=') {
        pos = j + 1;
        break;
      }
    }
    if (pos == std::string::npos) fail(ErrorKind::InvalidInput, std::string("missing '") + name + "=' in origami text");
    std::size_t end = text.find_first_of(";\n", pos);
    return parse_cycle_string(text.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
  };
  auto rc = field('r'), uc = field('u');
  std::size_t d = degree;
  for (const auto* cs : {&rc, &uc})
    for (const auto& c : *cs)
      for (int v : c) d = std::max(d, static_cast<std::size_t>(v + 1));
  if (d == 0) d = 1;
  Origami o(Permutation::from_cycles(d, rc), Permutation::from_cycles(d, uc));
  validate(o);
  return o;
}

namespace origamis {

/// r = (1 2), u = (1 3)
inline Origami L22() { return parse_origami_text("r=(1,2)(3); u=(1,3)(2)"); }

inline Origami Qmod9() { return parse_origami_text("r=(1,4,7)(2,3,5,6,8,9); u=(1,6,8,7,3,2)(4,9,5)"); }

inline Origami torus() { return Origami(); }

/// L-shaped origami with a horizontal arm of a squares and vertical arm of b.
inline Origami L_shape(std::size_t a, std::size_t b) {
  std::size_t d = a + b - 1;
  std::vector<int> r(d), u(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = u[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < a; ++i) r[i] = static_cast<int>((i + 1) % a);
  std::vector<int> col{0};
  for (std::size_t k = 0; k + 1 < b; ++k) col.push_back(static_cast<int>(a + k));
  for (std::size_t k = 0; k < col.size(); ++k) u[col[k]] = col[(k + 1) % col.size()];
  return {Permutation(r), Permutation(u)};
}

}  // namespace origamis

}  // namespace stlyap
