#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "stlyap/lyapunov/lyapunov.hpp"

namespace stlyap {

struct CommensurabilityWitness {
  WordST word;
  Mat2Z first, second;
};

struct CommensurabilityResult {
  bool commensurable = false;
  ModularSubgroup common;  // where they agree (Yes) or where the witness lives (No)
  std::optional<CommensurabilityWitness> witness;
};

inline bool infinite_order(const Mat2Z& m) {
  auto c = classify(m);
  return std::holds_alternative<Parabolic>(c) || std::holds_alternative<Hyperbolic>(c);
}

namespace detail {

using Mod2 = std::array<int, 4>;

inline Mod2 mod2(const Mat2Z& m) {
  auto r = [](const Integer& x) { return static_cast<int>(((x % 2) + 2) % 2); };
  return {r(m.a), r(m.b), r(m.c), r(m.d)};
}

inline Mod2 mul2(const Mod2& x, const Mod2& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % 2, (x[0] * y[1] + x[1] * y[3]) % 2, (x[2] * y[0] + x[3] * y[2]) % 2,
          (x[2] * y[1] + x[3] * y[3]) % 2};
}

/// Kernel of g ↦ (ρ₁(g), ρ₂(g)) mod 2 inside `base`; both images are torsion-free there.
inline ModularSubgroup level_two_kernel(const ModularEmbeddingData& d1, const ModularEmbeddingData& d2,
                                        const ModularSubgroup& base, std::size_t max_cosets) {
  std::size_t n = base.index();
  // cocycle values on γ_{c,h} = rep(c)·h·rep(c·h)⁻¹, h ∈ {S, T}
  std::vector<std::array<std::pair<Mod2, Mod2>, 2>> cocycle(n);
  for (std::size_t c = 0; c < n; ++c)
    for (int h : {1, 2}) {
      int next = base.act(static_cast<int>(c), h);
      WordST w = base.rep_words()[c] * WordST({h}) * base.rep_words()[next].inverse();
      cocycle[c][h - 1] = {mod2(d1.evaluate(w)), mod2(d2.evaluate(w))};
    }
  using State = std::tuple<int, Mod2, Mod2>;
  auto step = [&](const State& s, int h) {
    auto [c, a, b] = s;
    const auto& [x, y] = cocycle[c][h - 1];
    return State{base.act(c, h), mul2(a, x), mul2(b, y)};
  };
  Mod2 id{1, 0, 0, 1};
  return orbit_subgroup(
             State{0, id, id}, [&](const State& s) { return step(s, 1); }, [&](const State& s) { return step(s, 2); },
             [](const State& s) { return s; }, max_cosets, ErrorKind::EnumerationOverflow)
      .subgroup;
}

}  // namespace detail

/// A disagreement certifies No when one image has infinite order: powers of
/// parabolic or hyperbolic elements determine their roots, and never become
/// torsion. Torsion-only disagreements are retested on the level-two kernel.
inline CommensurabilityResult commensurable(const ModularEmbeddingData& d1, const ModularEmbeddingData& d2,
                                            std::size_t max_cosets = default_max_cosets) {
  CommensurabilityResult out;
  out.common = intersect(d1.domain(), d2.domain(), max_cosets);
  bool torsion_only = false;
  for (const auto& g : out.common.schreier_generators()) {
    Mat2Z a = d1.evaluate(g.word), b = d2.evaluate(g.word);
    if (a.projectively_equal(b)) continue;
    if (infinite_order(a) || infinite_order(b)) {
      out.witness = CommensurabilityWitness{g.word, a, b};
      return out;
    }
    torsion_only = true;
  }
  if (!torsion_only) {
    out.commensurable = true;
    return out;
  }
  out.common = detail::level_two_kernel(d1, d2, out.common, max_cosets);
  for (const auto& g : out.common.schreier_generators()) {
    Mat2Z a = d1.evaluate(g.word), b = d2.evaluate(g.word);
    if (!a.projectively_equal(b)) {
      out.witness = CommensurabilityWitness{g.word, a, b};
      return out;
    }
  }
  out.commensurable = true;
  return out;
}

struct WeakInvariants {
  LyapunovReport report;
  std::map<std::string, int> cusp_image_profile;  // heuristic only
};

inline WeakInvariants weak_invariants(const ModularEmbeddingData& d, std::size_t max_cosets = default_max_cosets) {
  WeakInvariants w;
  w.report = lyapunov_exponent(d, max_cosets);
  for (const auto& c : d.domain().cusps()) ++w.cusp_image_profile[class_name(classify(d.evaluate(c.parabolic_word)))];
  return w;
}

enum class WeakVerdict { No, Undecided };

/// Only λ is a proven invariant; equal λ decides nothing.
inline WeakVerdict weak_verdict(const WeakInvariants& a, const WeakInvariants& b) {
  return a.report.lambda == b.report.lambda ? WeakVerdict::Undecided : WeakVerdict::No;
}

}  // namespace stlyap
