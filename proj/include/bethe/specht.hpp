#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// Signed sum over the column group, stored sparsely by row assignment:
/// key[j-1] = row (1-based) holding entry j.
struct PolytabloidVector {
  std::map<std::vector<int>, Rational> terms;
};

PolytabloidVector polytabloid(const StandardTableau& t);

/// Exact matrices of the adjacent transpositions on the standard-polytabloid
/// basis, in canonical tableau order.
struct SpechtRep {
  Partition shape;
  std::vector<StandardTableau> basis;
  std::vector<RationalMatrix> adjacent;  // adjacent[k-1] = matrix of s_{k,k+1}

  int dim() const { return static_cast<int>(basis.size()); }
  int points() const { return shape.n(); }

  /// Matrix of s_{k,k+1}, 1 ≤ k ≤ N−1.
  const RationalMatrix& generator(int k) const {
    if (k < 1 || k > static_cast<int>(adjacent.size()))
      throw std::out_of_range("generator index out of range");
    return adjacent[k - 1];
  }

  /// Matrix of s_{ij}, composed from adjacent generators by the conjugation
  /// chain s_{i,k} = s_{k-1,k} s_{i,k-1} s_{k-1,k}.
  RationalMatrix transposition(int i, int j) const;
};

SpechtRep build_rep(const Partition& shape);

/// Jucys-Murphy matrix Σ_{j<i} s_{ji}; the zero matrix for i = 1.
RationalMatrix jm_matrix(const SpechtRep& rep, int i);

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> cast_matrix(const RationalMatrix& m) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<Scalar>(m(i, j));
  return out;
}

/// θ_i = Σ_{j≠i} s_{ij}/(z_i−z_j). Exact for rational z, floating otherwise.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> theta_matrix(const SpechtRep& rep, int i,
                                                                   const std::vector<Scalar>& z) {
  const int n = rep.points();
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("theta_matrix: z size mismatch");
  if (i < 1 || i > n) throw std::out_of_range("theta_matrix: index out of range");
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (z[a - 1] == z[b - 1])
        throw std::domain_error("theta_matrix: coincident z_" + std::to_string(a) + " = z_" +
                                std::to_string(b));

  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out = Matrix::Zero(rep.dim(), rep.dim());
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    const RationalMatrix s = rep.transposition(std::min(i, j), std::max(i, j));
    const Scalar weight = Scalar(1) / (z[i - 1] - z[j - 1]);
    out += cast_matrix<Scalar>(s) * weight;
  }
  return out;
}

/// Simultaneous eigenbasis of the Jucys-Murphy family; column k carries the
/// content vector of the k-th standard tableau.
struct YoungBasis {
  RationalMatrix vectors;
  std::vector<std::vector<int>> contents;
};

YoungBasis young_basis(const SpechtRep& rep);

}  // namespace bethe
