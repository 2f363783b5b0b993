#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccells/chirotope.hpp"
#include "ccells/sign_vector.hpp"
#include "ccells/subset_index.hpp"

namespace ccells {

/// Makes the smallest support element positive. The zero vector is returned as is.
SignVector canonicalize(const SignVector& x);

/// Signed circuits of a uniform oriented matroid of rank r on n elements.
///
/// One canonical representative per (r+1)-subset, indexed by the lexicographic
/// rank of its support; the negations are implicit. When n <= r the set is empty.
class CircuitSet {
 public:
  /// Validates that rep j has support lex-unrank(j) and is canonical.
  CircuitSet(int n, int r, std::vector<SignVector> reps);

  int elements() const { return n_; }
  int rank() const { return r_; }
  bool empty() const { return reps_.empty(); }
  /// Number of canonical representatives, C(n, r+1).
  std::size_t size() const { return reps_.size(); }
  std::span<const SignVector> representatives() const { return reps_; }
  const SignVector& operator[](std::size_t j) const { return reps_[j]; }

  /// reps followed by their negations.
  std::vector<SignVector> all() const;

  bool operator==(const CircuitSet&) const = default;

 private:
  struct Unchecked {};
  CircuitSet(Unchecked, int n, int r, std::vector<SignVector> reps)
      : n_(n), r_(r), reps_(std::move(reps)) {}
  friend class CircuitExtractor;

  int n_;
  int r_;
  std::vector<SignVector> reps_;
};

/// Computes circuit signs from basis signs, reusing the support/facet index
/// tables across many chirotopes with the same (n, r, order).
///
/// For a support b_1 < ... < b_{r+1}, X_{b_1} = + and
///   X_{b_{i+1}} = -X_{b_i} * chi(support - b_i) * chi(support - b_{i+1}).
class CircuitExtractor {
 public:
  CircuitExtractor(int n, int r, SubsetOrder order);

  int elements() const { return n_; }
  int rank() const { return r_; }
  SubsetOrder order() const { return order_; }

  /// Throws ParameterError if chi has different (n, r, order).
  CircuitSet operator()(const Chirotope& chi) const;

 private:
  int n_;
  int r_;
  SubsetOrder order_;
  std::vector<std::uint64_t> supports_;
  // facets_[j * (r+1) + i] = chirotope index of support j without its i-th element.
  std::vector<std::uint64_t> facets_;
};

CircuitSet circuits_from_chirotope(const Chirotope& chi);

/// True iff some circuit X or -X has no negative element.
bool has_positive_circuit(const CircuitSet& cs);

/// Reorients every circuit on `flipped` and re-canonicalizes.
CircuitSet reorient(const CircuitSet& cs, ElementSet flipped);

/// One representative per line in textual sign-vector form.
std::string dump_circuits(const CircuitSet& cs);

}  // namespace ccells
