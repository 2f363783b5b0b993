#include "ccells/subset_index.hpp"

#include <string>

#include "ccells/combinatorics.hpp"
#include "ccells/errors.hpp"

namespace ccells {

SubsetOrder parse_subset_order(std::string_view name) {
  if (name == "lex") return SubsetOrder::Lex;
  if (name == "colex") return SubsetOrder::Colex;
  throw FormatError("unknown subset order '" + std::string(name) + "' (expected lex or colex)");
}

std::string_view to_string(SubsetOrder order) {
  return order == SubsetOrder::Lex ? "lex" : "colex";
}

SubsetIndex::SubsetIndex(int n, int k, SubsetOrder order) : n_(n), k_(k), order_(order) {
  if (n < 0 || n > kMaxElements || k < 0 || k > n) {
    throw ParameterError("subset index needs 0 <= k <= n <= 64, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
  count_ = binomial(n, k);
  table_.resize(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(k + 1));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= k; ++b) {
      table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k + 1) + b] = binomial(a, b);
    }
  }
}

std::uint64_t SubsetIndex::choose(int a, int b) const {
  if (a < 0 || b < 0 || b > a) return 0;
  return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k_ + 1) + b];
}

std::uint64_t SubsetIndex::rank(std::span<const int> subset) const {
  if (static_cast<int>(subset.size()) != k_) {
    throw IndexError("subset has " + std::to_string(subset.size()) + " elements, expected " +
                     std::to_string(k_));
  }
  int prev = 0;
  for (int e : subset) {
    if (e <= prev || e > n_) {
      throw IndexError("subset must be strictly increasing within 1.." + std::to_string(n_));
    }
    prev = e;
  }
  return rank_sorted(subset);
}

std::uint64_t SubsetIndex::rank(ElementSet subset) const {
  if (subset.size() != k_ || subset.max_element() > n_) {
    throw IndexError("subset " + subset.to_string() + " is not a " + std::to_string(k_) +
                     "-subset of 1.." + std::to_string(n_));
  }
  int buf[kMaxElements];
  int i = 0;
  for (std::uint64_t b = subset.bits(); b != 0; b &= b - 1) buf[i++] = std::countr_zero(b) + 1;
  return rank_sorted(std::span<const int>(buf, static_cast<std::size_t>(k_)));
}

std::uint64_t SubsetIndex::rank_sorted(std::span<const int> subset) const {
  std::uint64_t r = 0;
  if (order_ == SubsetOrder::Lex) {
    int prev = 0;
    for (int i = 0; i < k_; ++i) {
      for (int v = prev + 1; v < subset[i]; ++v) r += choose(n_ - v, k_ - i - 1);
      prev = subset[i];
    }
  } else {
    for (int i = 0; i < k_; ++i) r += choose(subset[i] - 1, i + 1);
  }
  return r;
}

std::vector<int> SubsetIndex::unrank(std::uint64_t i) const {
  if (i >= count_) {
    throw IndexError("subset rank " + std::to_string(i) + " outside 0.." +
                     std::to_string(count_) + "-1");
  }
  std::vector<int> out(static_cast<std::size_t>(k_));
  if (order_ == SubsetOrder::Lex) {
    int v = 1;
    for (int pos = 0; pos < k_; ++pos) {
      for (;; ++v) {
        const std::uint64_t block = choose(n_ - v, k_ - pos - 1);
        if (i < block) break;
        i -= block;
      }
      out[pos] = v++;
    }
  } else {
    int hi = n_;
    for (int pos = k_ - 1; pos >= 0; --pos) {
      int c = hi;
      while (choose(c - 1, pos + 1) > i) --c;
      out[pos] = c;
      i -= choose(c - 1, pos + 1);
      hi = c - 1;
    }
  }
  return out;
}

ElementSet SubsetIndex::unrank_set(std::uint64_t i) const {
  const std::vector<int> elems = unrank(i);
  return ElementSet::of(elems);
}

}  // namespace ccells
