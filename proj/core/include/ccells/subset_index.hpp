#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ccells/sign_vector.hpp"

namespace ccells {

/// Enumeration order of the sorted k-subsets of {1..n}.
///
/// Lex compares sorted tuples from the smallest element: for n = 4, k = 2 it lists
/// 12 13 14 23 24 34. Colex compares from the largest element: 12 13 23 14 24 34.
enum class SubsetOrder { Lex, Colex };

/// Throws FormatError unless `name` is "lex" or "colex".
SubsetOrder parse_subset_order(std::string_view name);
std::string_view to_string(SubsetOrder order);

/// Bijection between sorted k-subsets of {1..n} and 0..C(n,k)-1.
class SubsetIndex {
 public:
  /// Requires 0 <= k <= n <= 64 (ParameterError otherwise).
  SubsetIndex(int n, int k, SubsetOrder order = SubsetOrder::Lex);

  int n() const { return n_; }
  int k() const { return k_; }
  SubsetOrder order() const { return order_; }
  std::uint64_t count() const { return count_; }

  /// Rank of a strictly increasing tuple of labels in 1..n. Throws IndexError otherwise.
  std::uint64_t rank(std::span<const int> subset) const;
  /// Rank of a k-element subset of the ground set.
  std::uint64_t rank(ElementSet subset) const;

  std::vector<int> unrank(std::uint64_t i) const;
  ElementSet unrank_set(std::uint64_t i) const;

  bool operator==(const SubsetIndex& o) const {
    return n_ == o.n_ && k_ == o.k_ && order_ == o.order_;
  }

 private:
  std::uint64_t rank_sorted(std::span<const int> subset) const;
  std::uint64_t choose(int a, int b) const;

  int n_;
  int k_;
  SubsetOrder order_;
  std::uint64_t count_;
  // Pascal triangle rows 0..n, columns 0..k.
  std::vector<std::uint64_t> table_;
};

}  // namespace ccells
