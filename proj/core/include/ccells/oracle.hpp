#pragma once

// Independent reference computations: exact linear algebra over point
// configurations and a direct check of the circuit axioms. Test-scale only.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccells/chirotope.hpp"
#include "ccells/circuits.hpp"

namespace ccells::oracle {

using Integer = boost::multiprecision::cpp_int;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(IntegerMatrix m);

/// n vectors in Z^r such that every r of them are linearly independent.
class PointConfiguration {
 public:
  /// Throws DegeneracyError if some r-subset is dependent, ParameterError on shape errors.
  PointConfiguration(int r, std::vector<std::vector<Integer>> vectors);

  int points() const { return static_cast<int>(vectors_.size()); }
  int rank() const { return r_; }
  /// Vector of element e, 1-based.
  const std::vector<Integer>& vector(int e) const { return vectors_.at(e - 1); }
  const std::vector<std::vector<Integer>>& vectors() const { return vectors_; }

  /// det(v_{b_1}, ..., v_{b_r}) for a sorted basis; the sign is chi(B).
  Integer minor(std::span<const int> sorted_basis) const;

 private:
  int r_;
  std::vector<std::vector<Integer>> vectors_;
};

/// v_i = (1, t_i, t_i^2, ..., t_i^{r-1}); parameters must be strictly increasing.
PointConfiguration moment_curve_configuration(int n, int r, std::span<const std::int64_t> params);

/// Uniformly random integer coordinates in [-bound, bound], redrawn until in general position.
PointConfiguration random_configuration(int n, int r, std::mt19937_64& rng, int bound = 6);

/// chi(B) = sign det of the basis vectors, exactly.
Chirotope chirotope_of_configuration(const PointConfiguration& pc,
                                     SubsetOrder order = SubsetOrder::Lex);

/// For each (r+1)-subset, the signs of the unique linear dependence
/// sum_i lambda_i v_{b_i} = 0 with lambda_i = (-1)^i det(subset - b_i).
CircuitSet circuits_of_configuration(const PointConfiguration& pc);

/// Outcome of validate_circuit_axioms; `violation` describes the first failure.
struct AxiomReport {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

/// Checks, on reps and their negations: no empty circuit, closure under
/// negation, incomparable supports, and strong-enough elimination: for
/// X != -Y and e in X+ & Y- there is Z with e not in supp Z,
/// Z+ in (X+ | Y+) and Z- in (X- | Y-).
AxiomReport validate_circuit_axioms(const CircuitSet& cs);

}  // namespace ccells::oracle
