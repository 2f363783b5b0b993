#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccells {

/// Largest supported ground set. Elements are stored as bits of one 64-bit word.
inline constexpr int kMaxElements = 64;

/// Bitmask with bits 0..n-1 set, i.e. the ground set {1..n}.
constexpr std::uint64_t ground_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A subset of the ground set. Element e (1-based) is bit e-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  /// Builds a set from 1-based labels; throws InvalidElementError outside 1..64.
  static ElementSet of(std::initializer_list<int> elements);
  static ElementSet of(std::span<const int> elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const {
    return e >= 1 && e <= kMaxElements && ((bits_ >> (e - 1)) & 1U) != 0;
  }
  /// Largest label present, 0 when empty.
  constexpr int max_element() const { return 64 - std::countl_zero(bits_); }

  /// Sorted 1-based labels.
  std::vector<int> elements() const;
  std::string to_string() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet{bits_ | o.bits_}; }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet{bits_ & o.bits_}; }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A vector in {+,-,0}^E, stored as the positive and negative element masks.
///
/// Instances are immutable values. Every interface uses 1-based labels.
class SignVector {
 public:
  SignVector() = default;

  /// Throws DimensionError if n is outside 0..64 and InvalidElementError if the
  /// masks overlap or reach beyond element n.
  SignVector(int n, std::uint64_t pos, std::uint64_t neg);
  SignVector(int n, ElementSet pos, ElementSet neg) : SignVector(n, pos.bits(), neg.bits()) {}

  /// Parses the textual form, one character per element from {'+', '-', '0'}.
  /// The Unicode minus sign U+2212 is accepted for '-'.
  static SignVector parse(std::string_view text);
  static SignVector all_positive(int n) { return SignVector(n, ground_mask(n), 0); }

  int size() const { return n_; }
  std::uint64_t pos_bits() const { return pos_; }
  std::uint64_t neg_bits() const { return neg_; }
  ElementSet positive() const { return ElementSet{pos_}; }
  ElementSet negative() const { return ElementSet{neg_}; }
  ElementSet support() const { return ElementSet{pos_ | neg_}; }
  bool full_support() const { return (pos_ | neg_) == ground_mask(n_); }

  /// +1, -1 or 0 for element e in 1..n.
  int sign(int e) const;

  SignVector operator-() const {
    SignVector v = *this;
    std::swap(v.pos_, v.neg_);
    return v;
  }

  std::string to_string() const;

  bool operator==(const SignVector&) const = default;

 private:
  int n_ = 0;
  std::uint64_t pos_ = 0;
  std::uint64_t neg_ = 0;
};

/// S(X, Y): elements carrying opposite non-zero signs in X and Y.
ElementSet separation(const SignVector& x, const SignVector& y);

/// True iff S(X, Y) and S(X, -Y) are both empty or both non-empty.
bool orthogonal(const SignVector& x, const SignVector& y);

/// Negates the sign of element e, which must lie in the support of t.
SignVector flip(const SignVector& t, int e);

}  // namespace ccells
