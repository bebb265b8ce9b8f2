#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "stlyap/exact/numeric.hpp"

namespace stlyap {

struct Mat2Z {
  Integer a = 1, b = 0, c = 0, d = 1;

  static Mat2Z identity() { return {}; }
  static Mat2Z T() { return {1, 1, 0, 1}; }
  static Mat2Z S() { return {0, -1, 1, 0}; }
  static Mat2Z minus_identity() { return {-1, 0, 0, -1}; }

  Integer det() const { return a * d - b * c; }
  Integer trace() const { return a + d; }

  /// Inverse in SL₂.
  Mat2Z inverse() const { return {d, -b, -c, a}; }
  Mat2Z operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;

  bool is_central() const { return b == 0 && c == 0 && (a == d) && (a == 1 || a == -1); }

  /// Equality in PSL₂.
  bool projectively_equal(const Mat2Z& o) const { return *this == o || *this == -o; }

  std::string to_string() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
  }
};

inline Mat2Z power(const Mat2Z& m, long long k) {
  Mat2Z base = k < 0 ? m.inverse() : m;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Mat2Z acc;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Word over S, T. Letters: 1 = S, 2 = T, negatives are inverses.
class WordST {
 public:
  WordST() = default;
  explicit WordST(const std::vector<int>& letters) {
    for (int l : letters) push(l);
  }

  static WordST S() { return WordST({1}); }
  static WordST T() { return WordST({2}); }
  static WordST T_power(long long k) {
    WordST w;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) w.push(k < 0 ? -2 : 2);
    return w;
  }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push(int l) {
    if (l == 0 || std::abs(l) > 2) fail(ErrorKind::InvalidInput, "S/T word letter out of range");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  WordST inverse() const {
    WordST w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
  }

  friend WordST operator*(WordST a, const WordST& b) {
    for (int l : b.letters_) a.push(l);
    return a;
  }
  friend bool operator==(const WordST&, const WordST&) = default;

  /// "T^2 S^-1 T"; the empty word prints as "1".
  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      long long e = static_cast<long long>(j - i) * (letters_[i] > 0 ? 1 : -1);
      if (!s.empty()) s += ' ';
      s += std::abs(letters_[i]) == 1 ? 'S' : 'T';
      if (e != 1) s += "^" + std::to_string(e);
      i = j;
    }
    return s;
  }

  /// Accepts S, T (lowercase = inverse), optional ^k, whitespace, '*' or '.'
  /// separators; "1" or "" is the identity.
  static WordST parse(const std::string& text) {
    WordST w;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.'))
        ++i;
    };
    skip();
    if (text.substr(i) == "1") return w;
    while (i < text.size()) {
      char ch = text[i];
      int letter;
      switch (ch) {
        case 'S': letter = 1; break;
        case 's': letter = -1; break;
        case 'T': letter = 2; break;
        case 't': letter = -2; break;
        default: fail(ErrorKind::InvalidInput, std::string("bad character '") + ch + "' in S/T word '" + text + "'");
      }
      ++i;
      long long e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        try {
          e = std::stoll(text.substr(start, i - start));
        } catch (const std::exception&) {
          fail(ErrorKind::InvalidInput, "bad exponent in S/T word '" + text + "'");
        }
      }
      for (long long k = 0; k < (e < 0 ? -e : e); ++k) w.push(e < 0 ? -letter : letter);
      skip();
    }
    return w;
  }

 private:
  std::vector<int> letters_;
};

inline Mat2Z letter_matrix(int l) {
  switch (l) {
    case 1: return Mat2Z::S();
    case -1: return Mat2Z::S().inverse();
    case 2: return Mat2Z::T();
    default: return Mat2Z::T().inverse();
  }
}

inline Mat2Z word_to_matrix(const WordST& w) {
  Mat2Z m;
  for (int l : w.letters()) m = m * letter_matrix(l);
  return m;
}

/// Euclid on the first column: M = T^q S · M' with M' = S⁻¹T^{-q}M, until
/// the lower-left entry vanishes and M' = ±T^b.
inline WordST matrix_to_word(Mat2Z m) {
  if (m.det() != 1) fail(ErrorKind::InvalidInput, "matrix_to_word: determinant is not 1");
  WordST w;
  const Mat2Z s_inv = Mat2Z::S().inverse();
  while (m.c != 0) {
    Integer q = floor_div(m.a, m.c);
    long long qq = static_cast<long long>(q);
    w = w * WordST::T_power(qq) * WordST::S();
    m = s_inv * power(Mat2Z::T(), -qq) * m;
  }
  if (m.a == 1) return w * WordST::T_power(static_cast<long long>(m.b));
  return w * WordST::S() * WordST::S() * WordST::T_power(static_cast<long long>(-m.b));
}

struct Center {};
struct Elliptic {
  int order;  // projective order, 2 or 3
};
struct Parabolic {
  bool at_infinity = false;
  Rational fixed_point;  // valid when !at_infinity
};
struct Hyperbolic {};

using ElementClass = std::variant<Center, Elliptic, Parabolic, Hyperbolic>;

inline ElementClass classify(const Mat2Z& m) {
  if (m.is_central()) return Center{};
  Integer t = abs(m.trace());
  if (t == 0) return Elliptic{2};
  if (t == 1) return Elliptic{3};
  if (t == 2) {
    if (m.c == 0) return Parabolic{true, Rational(0)};
    return Parabolic{false, make_rational(m.a - m.d, 2 * m.c)};
  }
  return Hyperbolic{};
}

inline std::string class_name(const ElementClass& c) {
  if (std::holds_alternative<Center>(c)) return "Center";
  if (auto e = std::get_if<Elliptic>(&c)) return "Elliptic(" + std::to_string(e->order) + ")";
  if (std::holds_alternative<Parabolic>(c)) return "Parabolic";
  return "Hyperbolic";
}

struct TranslationData {
  Mat2Z g;    // g·∞ is the fixed point
  Integer m;  // g⁻¹·P·g = sign·T^m
  int sign;
};

/// Unimodular completion (p x; q y) of a primitive column.
inline Mat2Z complete_column(const Integer& p, const Integer& q) {
  auto eg = extended_gcd(p, q);  // p·x' + q·y' = 1
  if (eg.g != 1) fail(ErrorKind::InvalidInput, "column is not primitive");
  // det (p x; q y) = p·y − q·x = 1 with y = x', x = −y'
  return {p, -eg.y, q, eg.x};
}

inline TranslationData translation_exponent(const Mat2Z& p) {
  auto cls = classify(p);
  auto par = std::get_if<Parabolic>(&cls);
  if (!par) fail(ErrorKind::NotParabolic, "element " + p.to_string() + " is not parabolic");
  Mat2Z g = par->at_infinity ? Mat2Z::identity()
                             : complete_column(numerator_of(par->fixed_point), denominator_of(par->fixed_point));
  Mat2Z conj = g.inverse() * p * g;
  int sign = conj.a == 1 ? 1 : -1;
  return {g, conj.b * sign, sign};
}

}  // namespace stlyap
