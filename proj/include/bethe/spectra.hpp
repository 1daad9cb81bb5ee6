#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// One point of the joint spectrum of a commuting family.
struct WeightLine {
  ComplexVector mu;        // value per operator
  int multiplicity = 0;    // generalized weight-space dimension
  int eigen_dim = 0;       // joint eigenspace dimension; < multiplicity flags a nilpotent part
  ComplexMatrix basis;     // ambient_dim × multiplicity, orthonormal columns
};

struct JointSpectrum {
  std::vector<WeightLine> weights;
  int ambient_dim = 0;
  int attempts = 1;                   // random-combination draws used
  std::uint64_t rng_seed = 0;
  std::vector<Complex> combination;   // coefficients of the final draw

  int total_multiplicity() const;
};

/// Joint spectrum via a random combination Σ a_i M_i: eigenvalues are
/// clustered, weights are read off as Rayleigh quotients on the cluster
/// spaces, and a fresh draw distinguishes combination collisions from true
/// multiplicity. Throws std::invalid_argument when the family does not
/// commute to within tol.
JointSpectrum joint_spectrum(const std::vector<ComplexMatrix>& ops, double tol,
                             std::uint64_t rng_seed = 20240711ULL);

struct SemisimplicityVerdict {
  bool semisimple = false;
  std::optional<ComplexVector> witness;  // offending weight when false
  JointSpectrum spectrum;
};

/// True iff eigenspace dimensions sum to the ambient dimension.
SemisimplicityVerdict is_semisimple(const std::vector<ComplexMatrix>& ops, double tol,
                                    std::uint64_t rng_seed = 20240711ULL);

struct MatchReport {
  std::vector<std::pair<int, int>> pairs;  // (predicted index, spectrum slot)
  std::vector<double> residuals;           // max-norm distance per pair
  std::vector<int> unmatched_predicted;
  std::vector<int> unmatched_spectrum;
  double max_residual = 0.0;
  bool success = false;
};

/// Bipartite matching of predicted tuples against spectrum tuples (weights
/// expanded by multiplicity) under the max norm; success only for a perfect
/// matching with all residuals ≤ tol.
MatchReport match_bethe(const std::vector<ComplexVector>& predicted, const JointSpectrum& spectrum,
                        double tol);

}  // namespace bethe
