#include "ccells/circuits.hpp"

#include "ccells/errors.hpp"

namespace ccells {

SignVector canonicalize(const SignVector& x) {
  const std::uint64_t support = x.pos_bits() | x.neg_bits();
  const std::uint64_t lowest = support & (~support + 1);
  return (x.neg_bits() & lowest) != 0 ? -x : x;
}

CircuitSet::CircuitSet(int n, int r, std::vector<SignVector> reps)
    : n_(n), r_(r), reps_(std::move(reps)) {
  if (r < 1 || n < r || n > kMaxElements) {
    throw ParameterError("circuit set needs 1 <= r <= n <= 64");
  }
  if (n == r) {
    if (!reps_.empty()) throw ParameterError("rank-n matroid has no circuits");
    return;
  }
  const SubsetIndex supports(n, r + 1);
  if (reps_.size() != supports.count()) {
    throw ParameterError("expected " + std::to_string(supports.count()) + " circuits, got " +
                         std::to_string(reps_.size()));
  }
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    const SignVector& x = reps_[j];
    if (x.size() != n) throw DimensionError("circuit on wrong ground set");
    if (x.support() != supports.unrank_set(j)) {
      throw ParameterError("circuit " + std::to_string(j) + " has support " +
                           x.support().to_string() + ", expected " +
                           supports.unrank_set(j).to_string());
    }
    if (canonicalize(x) != x) {
      throw ParameterError("circuit " + x.to_string() + " is not canonical");
    }
  }
}

std::vector<SignVector> CircuitSet::all() const {
  std::vector<SignVector> out(reps_);
  for (const SignVector& x : reps_) out.push_back(-x);
  return out;
}

CircuitExtractor::CircuitExtractor(int n, int r, SubsetOrder order)
    : n_(n), r_(r), order_(order) {
  if (r < 1 || n < r || n > kMaxElements) {
    throw ParameterError("circuit extraction needs 1 <= r <= n <= 64");
  }
  if (n == r) return;
  const SubsetIndex support_index(n, r + 1, SubsetOrder::Lex);
  const SubsetIndex basis_index(n, r, order);
  supports_.reserve(support_index.count());
  facets_.reserve(support_index.count() * static_cast<std::size_t>(r + 1));
  for (std::uint64_t j = 0; j < support_index.count(); ++j) {
    const ElementSet support = support_index.unrank_set(j);
    supports_.push_back(support.bits());
    for (std::uint64_t b = support.bits(); b != 0; b &= b - 1) {
      const std::uint64_t lowest = b & (~b + 1);
      facets_.push_back(basis_index.rank(ElementSet{support.bits() & ~lowest}));
    }
  }
}

CircuitSet CircuitExtractor::operator()(const Chirotope& chi) const {
  if (chi.elements() != n_ || chi.rank() != r_ || chi.order() != order_) {
    throw ParameterError("chirotope does not match the extractor's (n, r, order)");
  }
  const std::span<const std::int8_t> chi_signs = chi.signs();
  const std::size_t width = static_cast<std::size_t>(r_) + 1;
  std::vector<SignVector> reps;
  reps.reserve(supports_.size());
  for (std::size_t j = 0; j < supports_.size(); ++j) {
    const std::uint64_t* facet = &facets_[j * width];
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    int sign = 1;
    std::size_t i = 0;
    for (std::uint64_t b = supports_[j]; b != 0; b &= b - 1, ++i) {
      if (i > 0) sign = -sign * chi_signs[facet[i - 1]] * chi_signs[facet[i]];
      const std::uint64_t lowest = b & (~b + 1);
      (sign > 0 ? pos : neg) |= lowest;
    }
    reps.emplace_back(n_, pos, neg);
  }
  return CircuitSet(CircuitSet::Unchecked{}, n_, r_, std::move(reps));
}

CircuitSet circuits_from_chirotope(const Chirotope& chi) {
  return CircuitExtractor(chi.elements(), chi.rank(), chi.order())(chi);
}

bool has_positive_circuit(const CircuitSet& cs) {
  for (const SignVector& x : cs.representatives()) {
    if (x.neg_bits() == 0 || x.pos_bits() == 0) return true;
  }
  return false;
}

CircuitSet reorient(const CircuitSet& cs, ElementSet flipped) {
  if (flipped.max_element() > cs.elements()) {
    throw InvalidElementError("reorientation set " + flipped.to_string() +
                              " exceeds ground set of size " + std::to_string(cs.elements()));
  }
  std::vector<SignVector> reps;
  reps.reserve(cs.size());
  for (const SignVector& x : cs.representatives()) {
    const std::uint64_t f = flipped.bits();
    const std::uint64_t pos = (x.pos_bits() & ~f) | (x.neg_bits() & f);
    const std::uint64_t neg = (x.neg_bits() & ~f) | (x.pos_bits() & f);
    reps.push_back(canonicalize(SignVector(cs.elements(), pos, neg)));
  }
  return CircuitSet(cs.elements(), cs.rank(), std::move(reps));
}

std::string dump_circuits(const CircuitSet& cs) {
  std::string out;
  for (const SignVector& x : cs.representatives()) {
    out += x.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace ccells
