#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/exact_linalg.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// Casimir element of sl_n on V⊗V, assembled from a root-vector basis with
/// Killing-dual partners plus the Cartan part. Basis order: v_k⊗v_l at index
/// (k-1)*n + (l-1).
RationalMatrix casimir_matrix(int n);

/// Index strings in {1..n}^N with exactly λ_k occurrences of k; spans the
/// weight space of weight Σ λ_i L_i.
struct WeightBasis {
  int n = 0;
  int N = 0;
  std::vector<std::vector<int>> sequences;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(sequences.size()); }
};

WeightBasis weight_basis(int n, const Partition& shape);

/// Place permutation s_ij acting on a weight basis (swap tensor slots i, j).
RationalMatrix place_permutation(const WeightBasis& wb, int i, int j);

/// Basis of the subspace killed by every raising operator e_{k,k+1}.
struct HighestWeightSpace {
  Partition shape;
  WeightBasis ambient;
  RationalMatrix vectors;  // ambient.dim() × dim

  int dim() const { return static_cast<int>(vectors.cols()); }
};

HighestWeightSpace highest_weight_space(int n, const Partition& shape);

/// Restriction of Σ_{j≠i} P_ij/(z_i−z_j) to the highest-weight space,
/// expressed in its basis. Exact for rational z.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> theta_on_tensor(
    const HighestWeightSpace& hws, int i, const std::vector<Scalar>& z);

/// Exact restriction helper: solves basis * out = action * basis.
RationalMatrix restrict_to_subspace(const RationalMatrix& basis, const RationalMatrix& action);

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> theta_on_tensor(
    const HighestWeightSpace& hws, int i, const std::vector<Scalar>& z) {
  const int n_points = hws.ambient.N;
  if (static_cast<int>(z.size()) != n_points)
    throw std::invalid_argument("theta_on_tensor: z size mismatch");
  for (int a = 1; a <= n_points; ++a)
    for (int b = a + 1; b <= n_points; ++b)
      if (z[a - 1] == z[b - 1])
        throw std::domain_error("theta_on_tensor: coincident z_" + std::to_string(a) + " = z_" +
                                std::to_string(b));

  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out = Matrix::Zero(hws.dim(), hws.dim());
  for (int j = 1; j <= n_points; ++j) {
    if (j == i) continue;
    const RationalMatrix swap = place_permutation(hws.ambient, std::min(i, j), std::max(i, j));
    const RationalMatrix restricted = restrict_to_subspace(hws.vectors, swap);
    const Scalar weight = Scalar(1) / (z[i - 1] - z[j - 1]);
    Matrix term(restricted.rows(), restricted.cols());
    for (Eigen::Index r = 0; r < restricted.rows(); ++r)
      for (Eigen::Index c = 0; c < restricted.cols(); ++c)
        term(r, c) = scalar_cast<Scalar>(restricted(r, c));
    out += term * weight;
  }
  return out;
}

}  // namespace bethe
