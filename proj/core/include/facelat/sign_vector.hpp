#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

#include "facelat/bitset.hpp"

namespace facelat {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
char to_char(Sign s);

/// A word in {-,0,+}^A over a fixed hyperplane order. Stored as a plus-set
/// and a minus-set so the covector operations are word-parallel.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t size) : plus_(size), minus_(size) {}
  SignVector(std::initializer_list<int> signs);

  static SignVector all(std::size_t size, Sign s);
  static SignVector zero(std::size_t size) { return SignVector(size); }

  std::size_t size() const noexcept { return plus_.size(); }

  Sign operator[](std::size_t i) const noexcept {
    return plus_.test(i) ? Sign::Plus : (minus_.test(i) ? Sign::Minus : Sign::Zero);
  }
  void set(std::size_t i, Sign s) noexcept {
    plus_.assign(i, s == Sign::Plus);
    minus_.assign(i, s == Sign::Minus);
  }

  const Bitset& plus_set() const noexcept { return plus_; }
  const Bitset& minus_set() const noexcept { return minus_; }
  Bitset support() const { return plus_ | minus_; }
  Bitset zero_set() const { return support().complement(); }
  std::size_t support_size() const { return plus_.count() + minus_.count(); }
  bool is_zero() const { return plus_.none() && minus_.none(); }
  bool is_tope() const { return support_size() == size(); }

  bool operator==(const SignVector& o) const noexcept = default;

  /// Lexicographic with - < 0 < + at the first differing position.
  std::strong_ordering operator<=>(const SignVector& o) const noexcept;

  std::size_t hash() const noexcept { return plus_.hash() * 31 + minus_.hash(); }

  /// Text form "(+,-,0)".
  std::string to_string() const;
  /// Accepts the text form with ASCII '-' or U+2212. Throws Error(ParseError).
  static SignVector parse(std::string_view text);

 private:
  SignVector(Bitset plus, Bitset minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

  friend SignVector opposite(const SignVector& f);
  friend SignVector compose(const SignVector& f, const SignVector& g);
  friend SignVector reorient(const SignVector& f, const SignVector& g);

  Bitset plus_;
  Bitset minus_;
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const noexcept { return v.hash(); }
};

/// -F.
SignVector opposite(const SignVector& f);
/// F o G: F where F is nonzero, G elsewhere.
SignVector compose(const SignVector& f, const SignVector& g);
/// F_{-G}: F flipped wherever G vanishes.
SignVector reorient(const SignVector& f, const SignVector& g);
/// S(F,G) = { H : F(H) = -G(H) != 0 }.
HyperplaneSet separation(const SignVector& f, const SignVector& g);
/// F(H) = 0 or F(H) = G(H) for all H; i.e. F is a face of G.
bool is_face_of(const SignVector& f, const SignVector& g);
/// Componentwise G(H) <= F(H) with - < 0 < +.
bool componentwise_geq(const SignVector& f, const SignVector& g);

}  // namespace facelat
