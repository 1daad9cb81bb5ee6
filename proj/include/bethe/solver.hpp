#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/master_function.hpp"

namespace bethe {

struct SolverSettings {
  double newton_tol = 1e-12;     // residual max-norm target
  int max_iter = 100;
  double dedup_tol = 1e-8;
  double step_initial = 0.1;     // continuation controls
  double step_min = 1e-10;
  double step_max = 0.5;
  double contract = 0.5;
  double expand = 1.5;
  double nondegeneracy_tol = 1e-8;
  double collision_sep = 1e-12;  // relative separation defining a valid configuration
  double diagonal_tol = 1e-9;    // relative z-separation treated as a diagonal hit
  double zone_ratio = 1e3;
  double gamma = 1e4;            // seed realization scale
};

enum class SolverFailure {
  MaxIterations,
  SingularJacobian,
  CollisionLocked,
  StepUnderflow,
  DiagonalCrossing
};

std::string to_string(SolverFailure kind);

class SolverError : public std::runtime_error {
 public:
  SolverError(SolverFailure kind, const std::string& message, double path_position = -1.0)
      : std::runtime_error(message), kind_(kind), path_position_(path_position) {}

  SolverFailure kind() const { return kind_; }
  /// Path parameter s where a continuation failed; −1 outside continuation.
  double path_position() const { return path_position_; }

 private:
  SolverFailure kind_;
  double path_position_;
};

struct CriticalPointCertificate {
  BetheConfiguration configuration;
  std::vector<Complex> z;
  double residual_norm = 0.0;
  SingularValueBounds hessian_sv;
  ComplexVector eigenvalues;  // grad_z S′ at the configuration
  int newton_iterations = 0;
  int seed_tableau = -1;      // provenance: index into the canonical tableau list

  bool nondegenerate(double rel_tol) const {
    if (configuration.total() == 0) return true;
    return hessian_sv.min_sv > rel_tol * hessian_sv.max_sv;
  }
};

/// Residual, Hessian singular values and eigenvalue tuple at a configuration.
CriticalPointCertificate certify(const BetheConfiguration& t, const std::vector<Complex>& z);

/// Damped Newton iteration on ∂S′/∂t = 0; steps are halved until the iterate
/// stays a valid configuration.
CriticalPointCertificate newton_solve(const BetheConfiguration& guess,
                                      const std::vector<Complex>& z,
                                      const SolverSettings& settings = {});

/// Sort each level by (real, imaginary); the within-level order is gauge.
BetheConfiguration canonicalize(BetheConfiguration t);
bool same_point(const BetheConfiguration& a, const BetheConfiguration& b, double tol);

struct ContinuationPath {
  std::vector<Complex> z_start;
  std::vector<Complex> z_end;
  std::optional<std::vector<Complex>> detour_mid;  // piecewise-linear waypoint

  std::vector<Complex> at(double s) const;
  std::vector<Complex> velocity(double s) const;
};

/// Euler predictor on dt/ds = −H⁻¹ (∂grad/∂z) ż with Newton correction,
/// adaptive in s.
CriticalPointCertificate continue_path(const CriticalPointCertificate& start,
                                       const ContinuationPath& path,
                                       const SolverSettings& settings = {});

struct SeedFailure {
  int tableau_index = -1;
  std::string stage;  // "seed", "polish", "descent", "target"
  std::string message;
};

struct FindAllResult {
  Partition shape;
  std::vector<Complex> z;
  std::vector<CriticalPointCertificate> points;
  Integer expected_count;  // dim W^λ
  std::vector<SeedFailure> failures;

  bool complete() const { return Integer(static_cast<long>(points.size())) == expected_count; }
};

/// One seed per standard tableau, realized at z_j = γ^j, polished, transported
/// to the target z by a chain of continuation legs, then deduplicated.
FindAllResult find_all_critical_points(const Partition& shape, const std::vector<Complex>& z,
                                       const SolverSettings& settings = {});

}  // namespace bethe
