#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "ccells/circuits.hpp"
#include "ccells/sign_vector.hpp"

namespace ccells {

/// Full-support sign vectors closed under negation.
///
/// A full-support vector is keyed by its positive mask. Membership is a bit test
/// in a dense table for n <= 24 and a hash lookup otherwise.
class TopeSet {
 public:
  TopeSet() = default;
  /// `positive_masks` need not be sorted; throws PreconditionError if the set is
  /// not closed under negation.
  TopeSet(int n, std::vector<std::uint64_t> positive_masks);

  int elements() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  /// Positive masks in increasing order.
  std::span<const std::uint64_t> keys() const { return keys_; }

  bool contains_key(std::uint64_t positive_mask) const;
  /// False for vectors on another ground set or without full support.
  bool contains(const SignVector& t) const;

  std::vector<SignVector> members() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

/// T is a tope iff S(T, X) and S(T, -X) are non-empty for every circuit X.
/// Throws PreconditionError unless T has full support, DimensionError on size mismatch.
bool is_tope(const SignVector& t, const CircuitSet& cs);

/// Scans the 2^(n-1) vectors with element 1 positive and adds negations.
TopeSet enumerate_topes(const CircuitSet& cs);

/// A tope is a complete cell iff flipping any single element yields a tope.
/// Throws PreconditionError if t is not in `topes`.
bool is_complete_cell(const SignVector& t, const TopeSet& topes);

/// Complete-cell topes in increasing key order. Each projective complete cell
/// appears twice, as T and -T.
std::vector<SignVector> complete_cell_topes(const TopeSet& topes);

std::uint64_t count_complete_cell_topes(const TopeSet& topes);

}  // namespace ccells
