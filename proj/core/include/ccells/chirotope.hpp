#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccells/sign_vector.hpp"
#include "ccells/subset_index.hpp"

namespace ccells {

/// Basis orientation of a uniform oriented matroid of rank r on {1..n}.
///
/// Entry i of `signs()` is chi(B) for the sorted basis B = index().unrank(i).
/// Every entry is +1 or -1. No chirotope axioms are enforced; a Chirotope is a
/// candidate, and `validate_circuit_axioms` decides whether it is genuine.
class Chirotope {
 public:
  /// Throws ParameterError unless 1 <= r <= n <= 64, FormatError unless
  /// `signs` has C(n, r) entries from {+1, -1}.
  Chirotope(int n, int r, std::vector<std::int8_t> signs, SubsetOrder order = SubsetOrder::Lex);

  int elements() const { return index_.n(); }
  int rank() const { return index_.k(); }
  SubsetOrder order() const { return index_.order(); }
  const SubsetIndex& index() const { return index_; }
  std::span<const std::int8_t> signs() const { return signs_; }

  int sign_at(std::uint64_t i) const { return signs_.at(i); }
  /// chi of a sorted basis.
  int sign_of(std::span<const int> sorted_basis) const {
    return signs_[index_.rank(sorted_basis)];
  }
  int sign_of(ElementSet basis) const { return signs_[index_.rank(basis)]; }

  bool operator==(const Chirotope& o) const {
    return index_ == o.index_ && signs_ == o.signs_;
  }

 private:
  SubsetIndex index_;
  std::vector<std::int8_t> signs_;
};

/// Decodes C(n, r) characters from {'+', '-'} (whitespace ignored) in the given order.
/// A '0' is rejected with a FormatError: only uniform chirotopes are supported.
Chirotope parse_chirotope(std::string_view text, int n, int r,
                          SubsetOrder order = SubsetOrder::Lex);

/// Inverse of parse_chirotope under the chirotope's own order.
std::string serialize_chirotope(const Chirotope& chi);

/// chi(B) = + for every sorted basis.
Chirotope alternating_chirotope(int n, int r, SubsetOrder order = SubsetOrder::Lex);

/// chi_R(B) = (-1)^{|B & R|} chi(B).
Chirotope reorient(const Chirotope& chi, ElementSet flipped);

/// Relabels element e as perm[e - 1]; perm must be a permutation of 1..n.
/// The result satisfies chi'(perm(b_1), ..., perm(b_r)) = chi(b_1, ..., b_r) as an
/// alternating map, so entries pick up the sign of the sorting permutation.
Chirotope relabel(const Chirotope& chi, std::span<const int> perm);

/// Same chirotope stored in another subset order.
Chirotope with_order(const Chirotope& chi, SubsetOrder order);

}  // namespace ccells
