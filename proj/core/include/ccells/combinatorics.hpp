#pragma once

#include <cstdint>

namespace ccells {

/// C(n, k) with the vanishing convention: 0 when k < 0 or k > n.
/// Throws ParameterError for n < 0 and RangeError when the value exceeds 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// A projective arrangement of n pseudohyperplanes in dimension d (rank d + 1).
struct BoundParams {
  int d = 0;
  int n = 0;
};

/// Number of complete cells of the cyclic arrangement of n hyperplanes in
/// projective d-space:
///
///   C_d(n) = C(d, n-d) + C(d-1, n-d-1) + sum_{i=0}^{d-2} C(n-1, i)
///
/// This counts projective cells; the alternating oriented matroid of rank d + 1
/// has twice as many complete-cell topes. Requires n >= d + 1 >= 2.
std::uint64_t cyclic_complete_cells(BoundParams p);

/// Roudneff's conjectured maximum, sum_{i=0}^{d-2} C(n-1, i). Requires n >= d + 1 >= 2.
std::uint64_t roudneff_bound(BoundParams p);

}  // namespace ccells
