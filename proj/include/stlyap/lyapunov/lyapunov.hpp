#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stlyap/lyapunov/embedding.hpp"

namespace stlyap {

/// Larger than the order of any finite subgroup of PSL₂(ℤ).
constexpr std::size_t finite_image_cap = 48;

struct ImageGroup {
  bool finite = false;
  std::size_t order = 0;            // when finite
  std::optional<ModularSubgroup> lattice;
};

namespace detail {

inline Mat2Z projective_normal(const Mat2Z& m) {
  if (m.a < 0 || (m.a == 0 && (m.b < 0 || (m.b == 0 && m.c < 0)))) return -m;
  return m;
}

inline std::vector<Integer> key_of(const Mat2Z& m) {
  auto n = projective_normal(m);
  return {n.a, n.b, n.c, n.d};
}

}  // namespace detail

/// Closure of the image up to the finite cap, then coset enumeration.
inline ImageGroup image_subgroup(const ModularEmbeddingData& d, std::size_t max_cosets = default_max_cosets) {
  const auto& imgs = d.images();
  std::map<std::vector<Integer>, bool> seen;
  std::vector<Mat2Z> elems{Mat2Z::identity()};
  seen[detail::key_of(Mat2Z::identity())] = true;
  bool closed = true;
  for (std::size_t i = 0; i < elems.size() && closed; ++i)
    for (const auto& g : imgs) {
      Mat2Z p = elems[i] * g;
      if (seen.emplace(detail::key_of(p), true).second) {
        elems.push_back(p);
        if (elems.size() > finite_image_cap) {
          closed = false;
          break;
        }
      }
    }
  ImageGroup out;
  if (closed) {
    out.finite = true;
    out.order = elems.size();
    return out;
  }
  std::vector<WordST> words;
  for (const auto& m : imgs) words.push_back(matrix_to_word(m));
  try {
    out.lattice = coset_enumerate(words, max_cosets);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EnumerationOverflow)
      fail(ErrorKind::ThinOrUnbounded, "image group is not of finite index (" + std::string(e.what()) + ")");
    throw;
  }
  return out;
}

struct CuspContribution {
  CuspClass cusp;         // of Γ
  Mat2Z image;            // ρ(primitive parabolic)
  ElementClass image_class;
  bool parabolic = false;
  int image_cusp = -1;    // index into Δ's cusps
  long long image_width = 0;
  Integer translation = 0;  // |m|
  Integer index = 0;        // k = (Δ₀ : ρ(Γ₀))
};

/// Contribution of one cusp of Γ; `delta` is the image lattice.
inline CuspContribution cusp_contribution(const ModularEmbeddingData& d, const CuspClass& c,
                                          const ModularSubgroup& delta) {
  CuspContribution out;
  out.cusp = c;
  out.image = d.evaluate(c.parabolic_word);
  out.image_class = classify(out.image);
  if (std::holds_alternative<Hyperbolic>(out.image_class))
    fail(ErrorKind::HyperbolicImage, "cusp at " + (c.at_infinity ? std::string("infinity") : to_string(c.point)) +
                                         " has hyperbolic image " + out.image.to_string());
  if (!std::holds_alternative<Parabolic>(out.image_class)) return out;
  out.parabolic = true;
  auto te = translation_exponent(out.image);
  int coset = delta.trace(0, matrix_to_word(te.g));
  auto cusp_ids = delta.cusp_of_coset();
  out.image_cusp = cusp_ids[coset];
  long long w = 0;
  for (int p = coset;;) {
    ++w;
    p = delta.sigma_T()(p);
    if (p == coset) break;
  }
  out.image_width = w;
  out.translation = abs(te.m);
  if (out.translation % w != 0)
    fail(ErrorKind::DivisibilityViolation, "cusp width " + std::to_string(w) + " does not divide translation " +
                                               out.translation.str());
  out.index = out.translation / w;
  return out;
}

struct LyapunovReport {
  Rational lambda = 0;
  bool lattice = false;          // false: finite image
  std::size_t finite_order = 0;
  Integer degree = 0;
  Rational vol_ratio = 0;
  std::size_t domain_index = 0;
  std::size_t image_index = 0;
  std::optional<ModularSubgroup> image;
  std::vector<CuspContribution> cusp_table;
};

inline LyapunovReport lyapunov_exponent(const ModularEmbeddingData& d, std::size_t max_cosets = default_max_cosets) {
  LyapunovReport rep;
  rep.domain_index = d.domain().index();
  auto img = image_subgroup(d, max_cosets);
  if (img.finite) {
    rep.finite_order = img.order;
    return rep;
  }
  const auto& delta = *img.lattice;
  rep.lattice = true;
  rep.image = delta;
  rep.image_index = delta.index();
  std::size_t nd = delta.cusps().size();
  std::vector<Integer> sums(nd, 0);
  std::vector<bool> hit(nd, false);
  for (const auto& c : d.domain().cusps()) {
    auto cc = cusp_contribution(d, c, delta);
    if (cc.parabolic) {
      sums[cc.image_cusp] += cc.index;
      hit[cc.image_cusp] = true;
    }
    rep.cusp_table.push_back(std::move(cc));
  }
  for (std::size_t k = 0; k < nd; ++k)
    if (!hit[k]) fail(ErrorKind::UncoveredImageCusp, "cusp " + std::to_string(k + 1) + " of the image group has no preimage");
  for (std::size_t k = 1; k < nd; ++k)
    if (sums[k] != sums[0])
      fail(ErrorKind::DegreeInconsistency, "ramification sums differ between image cusps (" + sums[0].str() + " vs " +
                                               sums[k].str() + ")");
  rep.degree = sums[0];
  rep.vol_ratio = make_rational(Integer(delta.index()), Integer(d.domain().index()));
  rep.lambda = rep.vol_ratio * Rational(rep.degree);
  return rep;
}

/// λ for the embedding and for its restriction to a finite-index subgroup.
inline std::pair<LyapunovReport, LyapunovReport> finite_index_invariance_check(const ModularEmbeddingData& d,
                                                                               const ModularSubgroup& sub) {
  return {lyapunov_exponent(d), lyapunov_exponent(d.restrict_to(sub))};
}

}  // namespace stlyap
