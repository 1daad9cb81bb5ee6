#pragma once

#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/master_function.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// Closed-form solution s_i = Π_{j≤i} (1 − 1/Σ_{k=j}^n (1+a_k)) of the
/// one-coordinate-per-level critical system. Requires a_i ≥ 0 and a_n > 0.
std::vector<Rational> scalc(const std::vector<Rational>& a);

/// Exact residuals of that system at a candidate s: with s_0 = 1,
///   a_i/s_i − 1/(s_{i−1}−s_i) + 1/(s_i−s_{i+1})    for i < n,
///   a_n/s_n − 1/(s_{n−1}−s_n)                      for the last level,
/// where the final equation has no lower-neighbor term (the printed
/// "s_{n+1} = 0" convention denotes an absent term; the closed form and the
/// box-attachment equations both require this reading).
std::vector<Rational> scalc_residuals(const std::vector<Rational>& a,
                                      const std::vector<Rational>& s);

/// Level ratios created by adding a box in the given row (1-based): the
/// Scalc solution for a_j = λ_j − λ_{j+1} of the previous shape. Empty for
/// row 1.
std::vector<Rational> attach_box(const Partition& previous, int row);

struct SeedCoordinate {
  int level = 0;           // 1-based
  int creating_entry = 0;  // tableau entry whose box introduced this coordinate
  Rational beta;           // ratio t / z_{creating_entry}
  Complex value;
};

struct AsymptoticSeed {
  StandardTableau tableau;
  std::vector<Complex> z;
  std::vector<SeedCoordinate> coordinates;
  bool zone_ok = true;  // |z_{i+1}/z_i| met the requested ratio everywhere

  BetheConfiguration configuration() const;
};

/// Inductive box-attachment construction: entries 2..N in order, each new box
/// at row k contributing coordinates z_entry·s_l at levels l = 1..k−1.
AsymptoticSeed asymptotic_seed(const StandardTableau& tableau, const std::vector<Complex>& z,
                               double zone_ratio = 1e3);

/// Formal limit prediction: component j is c(T,j)/z_j.
ComplexVector predicted_eigenvalues(const StandardTableau& tableau,
                                    const std::vector<Complex>& z);

}  // namespace bethe
