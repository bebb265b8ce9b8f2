#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stlyap/modular/subgroup.hpp"
#include "stlyap/origami/origami.hpp"

namespace stlyap {

constexpr std::size_t default_max_orbit = 1000000;

inline bool in_veech_group(const Origami& o, const WordST& w) { return equivalent(act_word(w, o), o); }

struct VeechGroup {
  Origami base;
  ModularSubgroup subgroup;     // projective
  std::vector<Origami> orbit;   // canonical form per coset
  // Schreier generators corrected by S² where needed so that each lies in
  // the Veech group itself rather than only up to sign.
  std::vector<std::pair<WordST, Mat2Z>> schreier_gens;
  bool contains_minus_identity = true;
};

/// Orbit of the origami under the right action P·g = g⁻¹·P, classes taken
/// modulo −I so that the coset table is that of the projective Veech group.
inline VeechGroup veech_group(const Origami& o, std::size_t max_orbit = default_max_orbit) {
  validate(o);
  auto key = [](const Origami& p) { return std::min(canonical_form(p), canonical_form(minus_identity_action(p))); };
  auto act_s = [](const Origami& p) { return canonical_form(act_generator(-1, p)); };
  auto act_t = [](const Origami& p) { return canonical_form(act_generator(-2, p)); };
  auto res = orbit_subgroup(canonical_form(o), act_s, act_t, key, max_orbit, ErrorKind::OrbitOverflow);
  VeechGroup v;
  v.base = o;
  v.subgroup = std::move(res.subgroup);
  v.orbit = std::move(res.states);
  v.contains_minus_identity = equivalent(minus_identity_action(o), o);
  const WordST ss({1, 1});
  for (const auto& g : v.subgroup.schreier_generators()) {
    WordST w = g.word;
    if (!in_veech_group(o, w)) {
      w = w * ss;
      if (!in_veech_group(o, w))
        fail(ErrorKind::NotInVeechGroup, "Schreier generator " + g.word.to_string() + " does not preserve the origami");
    }
    v.schreier_gens.push_back({w, word_to_matrix(w)});
  }
  return v;
}

}  // namespace stlyap
