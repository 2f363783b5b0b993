#include "ccells/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "ccells/errors.hpp"

namespace ccells {

namespace {

void check_params(BoundParams p) {
  if (p.d < 1 || p.n < p.d + 1) {
    throw ParameterError("need n >= d + 1 >= 2, got d=" + std::to_string(p.d) +
                         " n=" + std::to_string(p.n));
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw RangeError("sum overflows 64 bits");
  }
  return a + b;
}

std::uint64_t partial_row_sum(std::int64_t n, std::int64_t upto) {
  std::uint64_t total = 0;
  for (std::int64_t i = 0; i <= upto; ++i) total = checked_add(total, binomial(n, i));
  return total;
}

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw ParameterError("binomial of negative n=" + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t value = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    // value == C(n, i); value * (n - i) is divisible by i + 1.
    const std::uint64_t divisor = static_cast<std::uint64_t>(i + 1);
    const std::uint64_t g = std::gcd(value, divisor);
    const std::uint64_t factor = static_cast<std::uint64_t>(n - i) / (divisor / g);
    const std::uint64_t reduced = value / g;
    if (factor != 0 && reduced > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw RangeError("C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
    value = reduced * factor;
  }
  return value;
}

std::uint64_t cyclic_complete_cells(BoundParams p) {
  check_params(p);
  std::uint64_t total = binomial(p.d, p.n - p.d);
  total = checked_add(total, binomial(p.d - 1, p.n - p.d - 1));
  return checked_add(total, partial_row_sum(p.n - 1, p.d - 2));
}

std::uint64_t roudneff_bound(BoundParams p) {
  check_params(p);
  return partial_row_sum(p.n - 1, p.d - 2);
}

}  // namespace ccells
