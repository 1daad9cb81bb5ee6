#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// Bethe coordinates grouped by level; unordered within a level.
struct BetheConfiguration {
  std::vector<std::vector<Complex>> levels;

  int level_count() const { return static_cast<int>(levels.size()); }
  int total() const;
  std::vector<int> level_sizes() const;
  ComplexVector flatten() const;
  static BetheConfiguration unflatten(const std::vector<int>& sizes, const ComplexVector& flat);
  static BetheConfiguration empty_for(const WeightData& wd);
};

/// Detects vanishing denominators: duplicate z, within-level or
/// adjacent-level coincidences, or level-1 coordinates hitting z. Separation
/// is measured relative to the local scale. Returns a description of the
/// first collision found.
std::optional<std::string> find_collision(const BetheConfiguration& t,
                                          const std::vector<Complex>& z, double min_sep);

/// Smallest absolute distance among the denominators that involve a t
/// coordinate (within-level, adjacent-level, level-1 against z). Infinity
/// when t is empty.
double min_separation(const BetheConfiguration& t, const std::vector<Complex>& z);

/// Per-coordinate version of min_separation, indexed like the flattened t:
/// entry a is the distance from coordinate a to its nearest interaction
/// partner. Coordinates at different magnitudes get independent scales.
Eigen::VectorXd coordinate_separations(const BetheConfiguration& t,
                                       const std::vector<Complex>& z);

/// Weights and multiplicities entering the general master function; all inner
/// products come from ⟨Σa_iL_i, Σb_jL_j⟩ = (1/2n)(Σa_ib_i − (1/n)ΣaΣb).
struct WeightSystem {
  int n = 0;
  std::vector<std::vector<int>> weights;  // Λ_k in L-coordinates, length n each
  std::vector<int> m;                     // multiplicities per level 1..n−1

  Rational inner(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> simple_root(int i) const;  // α_i = L_i − L_{i+1}

  /// N copies of the vector representation (all Λ_k = L_1).
  static WeightSystem vector_reps(int n, int N, std::vector<int> m);
};

/// General master function (principal log branch).
Complex eval_S_general(const WeightSystem& ws, const BetheConfiguration& t,
                       const std::vector<Complex>& z);

/// sl_n vector-representation master function and its z-gradient, kept for
/// cross-checks against the n-free form.
Complex eval_S2(int n, const BetheConfiguration& t, const std::vector<Complex>& z);
ComplexVector grad_z_S2(int n, const BetheConfiguration& t, const std::vector<Complex>& z);

/// The n-free rescaled master function S′ and its derivatives. S′ is the
/// canonical objective everywhere else in this project.
Complex eval_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z);
ComplexVector grad_t_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z);
ComplexVector grad_z_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z);
ComplexMatrix hessian_t_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z);
/// Mixed partials ∂²S′/∂t∂z, rows indexed like the flattened t.
ComplexMatrix mixed_tz_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z);

struct SingularValueBounds {
  double min_sv = 0.0;
  double max_sv = 0.0;
};

SingularValueBounds singular_value_bounds(const ComplexMatrix& m);

/// Smallest singular value above rel_tol times the largest. An empty Hessian
/// (no t-coordinates) is vacuously nondegenerate.
bool is_nondegenerate(const ComplexMatrix& hessian, double rel_tol,
                      SingularValueBounds* bounds = nullptr);

}  // namespace bethe
