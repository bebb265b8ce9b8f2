#pragma once

#include <string>

#include "stlyap/exact/free_word.hpp"
#include "stlyap/modular/sl2.hpp"

namespace stlyap {

/// Automorphism of F₂ given by the images of x and y.
struct Aut2 {
  FreeWord x_image = FreeWord::x();
  FreeWord y_image = FreeWord::y();

  static Aut2 identity() { return {}; }

  FreeWord operator()(const FreeWord& w) const { return w.substitute(x_image, y_image); }

  /// Integer matrix whose columns are the abelianized images.
  Mat2Z abelianization() const {
    auto ax = x_image.abelianize(), ay = y_image.abelianize();
    return {ax[0], ay[0], ax[1], ay[1]};
  }

  friend bool operator==(const Aut2&, const Aut2&) = default;

  std::string to_string() const { return "x -> " + x_image.to_string() + ", y -> " + y_image.to_string(); }
};

/// (a∘b)(w) = a(b(w))
inline Aut2 compose(const Aut2& a, const Aut2& b) { return {a(b.x_image), a(b.y_image)}; }

/// Inner automorphism w ↦ v·w·v⁻¹ composed after a.
inline Aut2 conjugate_by(const FreeWord& v, const Aut2& a) {
  return {v * a.x_image * v.inverse(), v * a.y_image * v.inverse()};
}

/// Fixed lifts of S, T and their inverses.
inline Aut2 generator_lift(int letter) {
  const FreeWord x = FreeWord::x(), y = FreeWord::y();
  switch (letter) {
    case 1: return {y, x.inverse()};
    case -1: return {y.inverse(), x};
    case 2: return {x, y * x};
    case -2: return {x, y * x.inverse()};
    default: fail(ErrorKind::InvalidInput, "bad S/T letter");
  }
}

inline Aut2 lift_to_aut(const WordST& w) {
  Aut2 a;
  for (int l : w.letters()) a = compose(a, generator_lift(l));
  return a;
}

}  // namespace stlyap
