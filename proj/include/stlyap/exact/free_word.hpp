#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "stlyap/exact/permutation.hpp"

namespace stlyap {

/// Reduced word in F₂ = ⟨x, y⟩. Letters: 1 = x, 2 = y, negatives are inverses.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters) {
    for (int l : letters) push(l);
  }

  static FreeWord x() { return FreeWord({1}); }
  static FreeWord y() { return FreeWord({2}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push(int l) {
    if (l == 0 || std::abs(l) > 2) fail(ErrorKind::InvalidInput, "free word letter out of range");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  FreeWord inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
  }

  friend FreeWord operator*(FreeWord a, const FreeWord& b) {
    for (int l : b.letters_) a.push(l);
    return a;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Substitute images for x and y (an endomorphism applied to this word).
  FreeWord substitute(const FreeWord& xi, const FreeWord& yi) const {
    FreeWord out;
    for (int l : letters_) {
      const FreeWord& img = std::abs(l) == 1 ? xi : yi;
      if (l > 0)
        for (int m : img.letters_) out.push(m);
      else
        for (auto it = img.letters_.rbegin(); it != img.letters_.rend(); ++it) out.push(-*it);
    }
    return out;
  }

  /// Exponent sums (x, y).
  std::array<long long, 2> abelianize() const {
    std::array<long long, 2> a{0, 0};
    for (int l : letters_) a[std::abs(l) - 1] += l > 0 ? 1 : -1;
    return a;
  }

  /// Right path action on squares: x moves i to r(i), y moves i to u(i).
  int trace(int start, const Permutation& r, const Permutation& u) const {
    Permutation ri = r.inverse(), ui = u.inverse();
    int p = start;
    for (int l : letters_) {
      switch (l) {
        case 1: p = r(p); break;
        case -1: p = ri(p); break;
        case 2: p = u(p); break;
        default: p = ui(p); break;
      }
    }
    return p;
  }

  /// Monodromy permutation i ↦ i·w.
  Permutation evaluate(const Permutation& r, const Permutation& u) const {
    std::vector<int> im(r.degree());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = trace(static_cast<int>(i), r, u);
    return Permutation(std::move(im));
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int l : letters_) {
      s += std::abs(l) == 1 ? 'x' : 'y';
      if (l < 0) s += "^-1";
      s += ' ';
    }
    s.pop_back();
    return s;
  }

 private:
  std::vector<int> letters_;
};

}  // namespace stlyap
