#include "ccells/topes.hpp"

#include <algorithm>

#include "ccells/errors.hpp"

namespace ccells {

namespace {

constexpr int kDenseLimit = 24;

// Both separations non-empty for every canonical circuit. Negated circuits swap
// the two sets, so checking the representatives suffices.
bool separates_all(std::uint64_t pos, std::uint64_t neg, std::span<const SignVector> circuits) {
  for (const SignVector& x : circuits) {
    if (((pos & x.neg_bits()) | (neg & x.pos_bits())) == 0) return false;
    if (((pos & x.pos_bits()) | (neg & x.neg_bits())) == 0) return false;
  }
  return true;
}

bool complete_key(std::uint64_t key, const TopeSet& topes) {
  for (int e = 0; e < topes.elements(); ++e) {
    if (!topes.contains_key(key ^ (std::uint64_t{1} << e))) return false;
  }
  return true;
}

}  // namespace

TopeSet::TopeSet(int n, std::vector<std::uint64_t> positive_masks)
    : n_(n), keys_(std::move(positive_masks)) {
  if (n < 0 || n > kMaxElements) throw DimensionError("tope set ground size outside 0..64");
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  const std::uint64_t full = ground_mask(n);
  for (std::uint64_t k : keys_) {
    if ((k & ~full) != 0) throw InvalidElementError("tope key exceeds ground set");
  }
  if (n <= kDenseLimit) {
    dense_.assign((std::size_t{1} << n) / 64 + 1, 0);
    for (std::uint64_t k : keys_) dense_[k >> 6] |= std::uint64_t{1} << (k & 63);
  } else {
    sparse_.insert(keys_.begin(), keys_.end());
  }
  for (std::uint64_t k : keys_) {
    if (!contains_key(full ^ k)) throw PreconditionError("tope set not closed under negation");
  }
}

bool TopeSet::contains_key(std::uint64_t key) const {
  if (n_ <= kDenseLimit) {
    if ((key >> n_) != 0) return false;
    return ((dense_[key >> 6] >> (key & 63)) & 1U) != 0;
  }
  return sparse_.contains(key);
}

bool TopeSet::contains(const SignVector& t) const {
  return t.size() == n_ && t.full_support() && contains_key(t.pos_bits());
}

std::vector<SignVector> TopeSet::members() const {
  std::vector<SignVector> out;
  out.reserve(keys_.size());
  const std::uint64_t full = ground_mask(n_);
  for (std::uint64_t k : keys_) out.emplace_back(n_, k, full ^ k);
  return out;
}

bool is_tope(const SignVector& t, const CircuitSet& cs) {
  if (t.size() != cs.elements()) {
    throw DimensionError("tope candidate of size " + std::to_string(t.size()) +
                         " for ground set of size " + std::to_string(cs.elements()));
  }
  if (!t.full_support()) throw PreconditionError("tope candidate must have full support");
  return separates_all(t.pos_bits(), t.neg_bits(), cs.representatives());
}

TopeSet enumerate_topes(const CircuitSet& cs) {
  const int n = cs.elements();
  if (n == 0) return TopeSet(0, {0});
  if (n > 62) throw ParameterError("tope scan over 2^(n-1) candidates needs n <= 62");
  const std::uint64_t full = ground_mask(n);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  const std::span<const SignVector> circuits = cs.representatives();
  std::vector<std::uint64_t> keys;
  for (std::uint64_t rest = 0; rest < half; ++rest) {
    const std::uint64_t pos = (rest << 1) | 1U;
    if (separates_all(pos, full ^ pos, circuits)) {
      keys.push_back(pos);
      keys.push_back(full ^ pos);
    }
  }
  return TopeSet(n, std::move(keys));
}

bool is_complete_cell(const SignVector& t, const TopeSet& topes) {
  if (!topes.contains(t)) {
    throw PreconditionError("sign vector " + t.to_string() + " is not a tope");
  }
  return complete_key(t.pos_bits(), topes);
}

std::vector<SignVector> complete_cell_topes(const TopeSet& topes) {
  std::vector<SignVector> out;
  const std::uint64_t full = ground_mask(topes.elements());
  for (std::uint64_t k : topes.keys()) {
    if (complete_key(k, topes)) out.emplace_back(topes.elements(), k, full ^ k);
  }
  return out;
}

std::uint64_t count_complete_cell_topes(const TopeSet& topes) {
  std::uint64_t count = 0;
  for (std::uint64_t k : topes.keys()) {
    if (complete_key(k, topes)) ++count;
  }
  return count;
}

}  // namespace ccells
