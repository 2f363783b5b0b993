#include "ccells/oracle.hpp"

#include <algorithm>

#include "ccells/errors.hpp"

namespace ccells::oracle {

namespace {

int sign_of(const Integer& v) { return v.sign(); }

}  // namespace

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw ParameterError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

PointConfiguration::PointConfiguration(int r, std::vector<std::vector<Integer>> vectors)
    : r_(r), vectors_(std::move(vectors)) {
  const int n = points();
  if (r < 1 || n < r || n > kMaxElements) {
    throw ParameterError("configuration needs 1 <= r <= n <= 64");
  }
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != r) throw ParameterError("vector of wrong dimension");
  }
  const SubsetIndex bases(n, r);
  for (std::uint64_t i = 0; i < bases.count(); ++i) {
    const std::vector<int> basis = bases.unrank(i);
    if (minor(basis) == 0) {
      throw DegeneracyError("vectors " + ElementSet::of(basis).to_string() +
                            " are linearly dependent");
    }
  }
}

Integer PointConfiguration::minor(std::span<const int> sorted_basis) const {
  IntegerMatrix m;
  m.reserve(sorted_basis.size());
  for (int e : sorted_basis) m.push_back(vector(e));
  return determinant(std::move(m));
}

PointConfiguration moment_curve_configuration(int n, int r, std::span<const std::int64_t> params) {
  if (static_cast<int>(params.size()) != n) {
    throw ParameterError("moment curve needs one parameter per point");
  }
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (params[i] <= params[i - 1]) {
      throw ParameterError("moment curve parameters must be strictly increasing");
    }
  }
  std::vector<std::vector<Integer>> vectors;
  vectors.reserve(params.size());
  for (std::int64_t t : params) {
    std::vector<Integer> v;
    Integer power = 1;
    for (int j = 0; j < r; ++j) {
      v.push_back(power);
      power *= t;
    }
    vectors.push_back(std::move(v));
  }
  return PointConfiguration(r, std::move(vectors));
}

PointConfiguration random_configuration(int n, int r, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  for (;;) {
    std::vector<std::vector<Integer>> vectors(static_cast<std::size_t>(n));
    for (auto& v : vectors) {
      for (int j = 0; j < r; ++j) v.emplace_back(coord(rng));
    }
    try {
      return PointConfiguration(r, std::move(vectors));
    } catch (const DegeneracyError&) {
    }
  }
}

Chirotope chirotope_of_configuration(const PointConfiguration& pc, SubsetOrder order) {
  const SubsetIndex bases(pc.points(), pc.rank(), order);
  std::vector<std::int8_t> signs(bases.count());
  for (std::uint64_t i = 0; i < bases.count(); ++i) {
    const int s = sign_of(pc.minor(bases.unrank(i)));
    if (s == 0) throw DegeneracyError("zero basis determinant");
    signs[i] = static_cast<std::int8_t>(s);
  }
  return Chirotope(pc.points(), pc.rank(), std::move(signs), order);
}

CircuitSet circuits_of_configuration(const PointConfiguration& pc) {
  const int n = pc.points();
  const int r = pc.rank();
  if (n < r + 1) throw ParameterError("circuits need at least r + 1 points");
  const SubsetIndex supports(n, r + 1);
  std::vector<SignVector> reps;
  reps.reserve(supports.count());
  for (std::uint64_t j = 0; j < supports.count(); ++j) {
    const std::vector<int> support = supports.unrank(j);
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      std::vector<int> rest;
      for (std::size_t k = 0; k < support.size(); ++k) {
        if (k != i) rest.push_back(support[k]);
      }
      // Cramer: lambda_i = (-1)^i det(rest), i counted from 1.
      int s = sign_of(pc.minor(rest));
      if (s == 0) throw DegeneracyError("degenerate circuit support");
      if ((i + 1) % 2 == 1) s = -s;
      (s > 0 ? pos : neg) |= std::uint64_t{1} << (support[i] - 1);
    }
    reps.push_back(canonicalize(SignVector(n, pos, neg)));
  }
  return CircuitSet(n, r, std::move(reps));
}

AxiomReport validate_circuit_axioms(const CircuitSet& cs) {
  const std::vector<SignVector> circuits = cs.all();
  const auto fail = [](std::string what) { return AxiomReport{false, std::move(what)}; };

  for (const SignVector& x : circuits) {
    if (x.support().empty()) return fail("empty circuit present");
  }
  for (const SignVector& x : circuits) {
    if (std::find(circuits.begin(), circuits.end(), -x) == circuits.end()) {
      return fail("negation of " + x.to_string() + " missing");
    }
  }
  for (const SignVector& x : circuits) {
    for (const SignVector& y : circuits) {
      const std::uint64_t sx = x.support().bits();
      const std::uint64_t sy = y.support().bits();
      if ((sx & ~sy) == 0 && x != y && x != -y) {
        return fail("support of " + x.to_string() + " contained in " + y.to_string());
      }
    }
  }
  for (const SignVector& x : circuits) {
    for (const SignVector& y : circuits) {
      if (x == -y) continue;
      const std::uint64_t allowed_pos = x.pos_bits() | y.pos_bits();
      const std::uint64_t allowed_neg = x.neg_bits() | y.neg_bits();
      for (std::uint64_t b = x.pos_bits() & y.neg_bits(); b != 0; b &= b - 1) {
        const std::uint64_t e = b & (~b + 1);
        const bool found = std::any_of(circuits.begin(), circuits.end(), [&](const SignVector& z) {
          return ((z.pos_bits() | z.neg_bits()) & e) == 0 && (z.pos_bits() & ~allowed_pos) == 0 &&
                 (z.neg_bits() & ~allowed_neg) == 0;
        });
        if (!found) {
          return fail("elimination of element " + std::to_string(std::countr_zero(e) + 1) +
                      " between " + x.to_string() + " and " + y.to_string() + " fails");
        }
      }
    }
  }
  return {};
}

}  // namespace ccells::oracle
