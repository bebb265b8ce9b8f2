#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stlyap/lyapunov/lyapunov.hpp"
#include "stlyap/splitting/splitting.hpp"

namespace stlyap {

struct AnalysisLimits {
  std::size_t max_orbit = default_max_orbit;
  std::size_t max_cosets = default_max_cosets;
};

struct Piece {
  std::string source;
  Subspace space;
  bool veech_invariant = false;
  std::optional<RankTwoRep> rank2;
  std::optional<LyapunovReport> lyapunov;
  std::string note;  // why λ is missing
};

struct AnalysisReport {
  Origami origami;
  StratumData stratum;
  SymplecticRep rep;
  std::vector<Piece> pieces;
  std::vector<Rational> spectrum;  // non-negative half, descending
};

/// Rethrows with the pipeline stage prepended.
template <typename F>
auto run_stage(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    auto colon = what.find(": ");
    throw Error(e.kind(), stage + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

namespace detail {

inline bool nondegenerate(const Subspace& s, std::size_t genus) {
  if (s.dim() == 0 || s.dim() % 2) return false;
  MatQ j = to_q(standard_J(genus));
  MatQ g(s.dim(), s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      auto jb = j * s.basis()[b];
      Rational acc = 0;
      for (std::size_t k = 0; k < jb.size(); ++k) acc += s.basis()[a][k] * jb[k];
      g(a, b) = acc;
    }
  return determinant(g) != 0;
}

/// Does τ act on s as ±1? Then lifts differing by τ agree projectively on s.
inline bool acts_as_sign(const Subspace& s, const MatQ& tau) {
  const auto& b = s.basis();
  VecQ w = tau * b[0];
  Rational sign = w == b[0] ? 1 : -1;
  for (const auto& v : b) {
    VecQ img = tau * v;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (img[k] != sign * v[k]) return false;
  }
  return true;
}

}  // namespace detail

/// Splits H₁ into the tautological plane, pieces coming from intermediate
/// covers and deck symmetries, and the remaining complement; every piece is
/// cut down to the symplectic complement of what was found before it.
inline AnalysisReport analyze(const Origami& o, const AnalysisLimits& lim = {}) {
  AnalysisReport out;
  out.origami = o;
  out.stratum = run_stage("stratum", [&] { return stratum(o); });
  auto veech = run_stage("veech", [&] { return veech_group(o, lim.max_orbit); });
  out.rep = run_stage("monodromy", [&] { return homology_rep(o, veech); });
  const auto& rep = out.rep;
  std::size_t n = rep.dim();

  auto deck = deck_group(o);
  std::vector<MatQ> deck_actions;
  for (const auto& tau : deck)
    if (!tau.is_identity()) deck_actions.push_back(to_q(deck_action(rep, tau)));

  Subspace found(n);
  auto offer = [&](const Subspace& candidate, const std::string& source) {
    Subspace rest = symplectic_complement(found, rep, false);
    Subspace piece = intersection(candidate, rest);
    if (piece.dim() == 0 || !detail::nondegenerate(piece, rep.genus)) return;
    found = sum(found, piece);
    out.pieces.push_back({source, piece, is_invariant(piece, rep), std::nullopt, std::nullopt, {}});
  };

  run_stage("splitting", [&] {
    offer(Subspace::span(n, tautological_plane(rep)), "tautological");
    auto covers = quotient_covers(o);
    for (std::size_t k = 0; k < covers.size(); ++k) {
      std::size_t qd = covers[k].quotient.degree();
      if (qd <= 1 || qd >= o.degree()) continue;
      offer(pullback_subspace(rep, covers[k], false), "pullback from quotient " + std::to_string(k + 1) + " (degree " +
                                                          std::to_string(qd) + ")");
    }
    // only cyclic deck groups are split; a generator is an element of full order
    for (const auto& tau : deck) {
      if (deck.size() == 1 || tau.order() != deck.size()) continue;
      for (const auto& iso : isotypic_cyclic(rep, tau))
        offer(iso.space, "deck " + tau.to_string() + " isotypic order " + std::to_string(iso.order));
      break;
    }
    Subspace rest = symplectic_complement(found, rep, false);
    if (rest.dim() > 0) out.pieces.push_back({"complement", rest, is_invariant(rest, rep), std::nullopt, std::nullopt, {}});
    return 0;
  });

  for (std::size_t i = 0; i < out.pieces.size(); ++i) {
    auto& p = out.pieces[i];
    if (p.space.dim() != 2) {
      p.note = "not of rank 2";
      continue;
    }
    bool scalar = true;
    for (const auto& m : deck_actions) scalar = scalar && detail::acts_as_sign(p.space, m);
    if (!scalar) {
      p.note = "deck transformations act on it by non-scalar maps";
      continue;
    }
    std::string stage = "piece " + std::to_string(i + 1);
    auto domain = run_stage(stage + " stabilizer", [&] { return stabilizer_of_subspace(rep, p.space, lim.max_orbit); });
    p.rank2 = run_stage(stage + " restriction", [&] { return restrict_to_rank2(rep, p.space, domain); });
    p.lyapunov = run_stage(stage + " lyapunov", [&] {
      return lyapunov_exponent(ModularEmbeddingData(p.rank2->domain, p.rank2->images), lim.max_cosets);
    });
    out.spectrum.push_back(p.lyapunov->lambda);
  }
  std::sort(out.spectrum.rbegin(), out.spectrum.rend());
  return out;
}

}  // namespace stlyap
