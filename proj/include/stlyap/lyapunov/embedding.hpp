#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stlyap/modular/todd_coxeter.hpp"

namespace stlyap {

/// A finite-index Γ ≤ PSL₂(ℤ) with a projective homomorphism Γ → PSL₂(ℤ),
/// given by the images of Γ's Schreier generators.
class ModularEmbeddingData {
 public:
  ModularEmbeddingData() = default;

  ModularEmbeddingData(ModularSubgroup domain, std::vector<Mat2Z> images)
      : domain_(std::move(domain)), images_(std::move(images)) {
    if (images_.size() != domain_.schreier_generators().size())
      fail(ErrorKind::InvalidInput, "expected " + std::to_string(domain_.schreier_generators().size()) +
                                        " generator images, got " + std::to_string(images_.size()));
    for (const auto& m : images_)
      if (m.det() != 1) fail(ErrorKind::InvalidInput, "image " + m.to_string() + " does not have determinant 1");
    for (const auto& rel : domain_.relators())
      if (!product(rel).is_central())
        fail(ErrorKind::RelatorViolation, "generator images violate a relator of the domain");
  }

  /// Γ generated by `words`; each word's image prescribed. Images of the
  /// Schreier generators are deduced from the word loops at coset 0 and the
  /// relator loops at every coset.
  static ModularEmbeddingData from_generator_images(const std::vector<WordST>& words, const std::vector<Mat2Z>& images,
                                                    std::size_t max_cosets = default_max_cosets) {
    if (words.size() != images.size()) fail(ErrorKind::InvalidInput, "words and images differ in number");
    for (const auto& m : images)
      if (m.det() != 1) fail(ErrorKind::InvalidInput, "image " + m.to_string() + " does not have determinant 1");
    auto domain = coset_enumerate(words, max_cosets);
    struct Equation {
      std::vector<SchreierLetter> letters;
      Mat2Z rhs;
    };
    std::vector<Equation> eqs;
    for (std::size_t i = 0; i < words.size(); ++i) {
      int end = 0;
      eqs.push_back({domain.schreier_path(0, words[i], &end), images[i]});
    }
    for (auto& rel : domain.relators()) eqs.push_back({std::move(rel), Mat2Z::identity()});
    std::size_t n = domain.schreier_generators().size();
    std::vector<std::optional<Mat2Z>> known(n);
    auto letter_value = [&](const SchreierLetter& l) {
      return l.second > 0 ? *known[l.first] : known[l.first]->inverse();
    };
    bool progress = true;
    std::vector<bool> done(eqs.size(), false);
    while (progress) {
      progress = false;
      for (std::size_t q = 0; q < eqs.size(); ++q) {
        if (done[q]) continue;
        const auto& e = eqs[q];
        int unknown_pos = -1, unknown_count = 0;
        for (std::size_t p = 0; p < e.letters.size(); ++p)
          if (!known[e.letters[p].first]) {
            unknown_pos = static_cast<int>(p);
            ++unknown_count;
          }
        if (unknown_pos < 0) {
          Mat2Z prod;
          for (const auto& l : e.letters) prod = prod * letter_value(l);
          if (!prod.projectively_equal(e.rhs))
            fail(ErrorKind::InconsistentImages, "generator images are not consistent with a homomorphism");
          done[q] = true;
          continue;
        }
        if (unknown_count != 1) continue;
        Mat2Z prefix, suffix;
        for (int p = 0; p < unknown_pos; ++p) prefix = prefix * letter_value(e.letters[p]);
        for (std::size_t p = unknown_pos + 1; p < e.letters.size(); ++p) suffix = suffix * letter_value(e.letters[p]);
        Mat2Z value = prefix.inverse() * e.rhs * suffix.inverse();
        const auto& ul = e.letters[unknown_pos];
        known[ul.first] = ul.second > 0 ? value : value.inverse();
        done[q] = true;
        progress = true;
      }
    }
    std::vector<Mat2Z> gen_images;
    for (std::size_t k = 0; k < n; ++k) {
      if (!known[k])
        fail(ErrorKind::UnderdeterminedImages,
             "image of Schreier generator " + domain.schreier_generators()[k].word.to_string() + " is not determined");
      gen_images.push_back(*known[k]);
    }
    domain.set_caller_generators(words);
    return ModularEmbeddingData(std::move(domain), std::move(gen_images));
  }

  /// Identity embedding of Γ.
  static ModularEmbeddingData inclusion(const ModularSubgroup& g) {
    std::vector<Mat2Z> imgs;
    for (const auto& s : g.schreier_generators()) imgs.push_back(s.matrix);
    return {g, imgs};
  }

  const ModularSubgroup& domain() const noexcept { return domain_; }
  const std::vector<Mat2Z>& images() const noexcept { return images_; }

  Mat2Z product(const std::vector<SchreierLetter>& letters) const {
    Mat2Z p;
    for (auto [k, e] : letters) p = p * (e > 0 ? images_[k] : images_[k].inverse());
    return p;
  }

  /// ρ(m), defined up to sign.
  Mat2Z evaluate(const Mat2Z& m) const { return product(domain_.rewrite(m).letters); }
  Mat2Z evaluate(const WordST& w) const { return product(domain_.rewrite(w).letters); }

  /// Restriction to a subgroup of the domain.
  ModularEmbeddingData restrict_to(const ModularSubgroup& sub) const {
    std::vector<Mat2Z> imgs;
    for (const auto& s : sub.schreier_generators()) {
      if (!domain_.contains(s.word))
        fail(ErrorKind::NotAMember, "generator " + s.word.to_string() + " of the subgroup is outside the domain");
      imgs.push_back(evaluate(s.word));
    }
    return {sub, imgs};
  }

 private:
  ModularSubgroup domain_;
  std::vector<Mat2Z> images_;
};

}  // namespace stlyap
