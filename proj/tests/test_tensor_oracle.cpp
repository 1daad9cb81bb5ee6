#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "bethe/specht.hpp"
#include "bethe/tensor_oracle.hpp"

using namespace bethe;

namespace {

bool is_zero(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

/// Swap operator v_k⊗v_l → v_l⊗v_k on C^n ⊗ C^n.
RationalMatrix swap_matrix(int n) {
  RationalMatrix p = RationalMatrix::Zero(n * n, n * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) p(l * n + k, k * n + l) = 1;
  return p;
}

std::vector<double> sorted_real_spectrum(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(m);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    out.push_back(eig.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

/// Apply a two-site operator at tensor slots (i,j) of a weight basis. Used to
/// route the Casimir construction through an independent embedding.
RationalMatrix apply_two_site(const RationalMatrix& two_site, const WeightBasis& wb, int i,
                              int j) {
  const int n = wb.n;
  RationalMatrix out = RationalMatrix::Zero(wb.dim(), wb.dim());
  for (int col = 0; col < wb.dim(); ++col) {
    const auto& seq = wb.sequences[col];
    const int source = (seq[i - 1] - 1) * n + (seq[j - 1] - 1);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const Rational coeff = two_site((a - 1) * n + (b - 1), source);
        if (coeff == 0) continue;
        std::vector<int> moved = seq;
        moved[i - 1] = a;
        moved[j - 1] = b;
        const auto it = wb.index.find(moved);
        if (it == wb.index.end()) continue;  // leaves the weight space: impossible for Ω
        out(it->second, col) += coeff;
      }
  }
  return out;
}

}  // namespace

TEST_CASE("casimir acts as stated on basis tensors") {
  const RationalMatrix omega = casimir_matrix(2);
  // Ω(v1⊗v2) = (1/2n)(−v1⊗v2/n + v2⊗v1) at n=2
  const int v12 = 0 * 2 + 1, v21 = 1 * 2 + 0, v11 = 0;
  CHECK(omega(v12, v12) == Rational(-1, 8));
  CHECK(omega(v21, v12) == Rational(1, 4));
  CHECK(omega(v11, v12) == 0);

  for (int n = 2; n <= 5; ++n) {
    const RationalMatrix om = casimir_matrix(n);
    // Ω(v1⊗v1) = ((1−1/n)/2n)·v1⊗v1
    CHECK(om(0, 0) == (1 - Rational(1, n)) / (2 * n));
  }
}

TEST_CASE("casimir equals the swap closed form exactly") {
  for (int n = 2; n <= 5; ++n) {
    const RationalMatrix omega = casimir_matrix(n);
    RationalMatrix closed = swap_matrix(n);
    closed -= RationalMatrix::Identity(n * n, n * n) * Rational(1, n);
    closed *= Rational(1, 2 * n);
    CHECK(is_zero(omega - closed));
  }
}

TEST_CASE("weight basis counts multiset permutations") {
  const WeightBasis wb = weight_basis(3, Partition({2, 1}));
  CHECK(wb.dim() == 3);  // sequences with two 1s and one 2
  CHECK(weight_basis(3, Partition({1, 1})).dim() == 2);
  CHECK_THROWS_AS(weight_basis(1, Partition({1, 1})), std::invalid_argument);
}

TEST_CASE("highest weight spaces") {
  const HighestWeightSpace trivial = highest_weight_space(2, Partition({3}));
  CHECK(trivial.dim() == 1);
  CHECK(trivial.vectors(0, 0) != 0);

  const HighestWeightSpace alt = highest_weight_space(3, Partition({1, 1}));
  CHECK(alt.dim() == 1);
  // spanned by v1⊗v2 − v2⊗v1
  const int i12 = alt.ambient.index.at({1, 2});
  const int i21 = alt.ambient.index.at({2, 1});
  CHECK(alt.vectors(i12, 0) == -alt.vectors(i21, 0));
  CHECK(alt.vectors(i12, 0) != 0);

  CHECK(highest_weight_space(3, Partition({2, 1})).dim() == 2);

  for (int n = 1; n <= 5; ++n)
    for (const Partition& shape : partitions_of(n)) {
      const HighestWeightSpace hws = highest_weight_space(shape.rows() + 1, shape);
      CHECK(Integer(hws.dim()) == hook_length_dimension(shape));
    }

  CHECK_THROWS_AS(highest_weight_space(2, Partition({1, 1})), std::invalid_argument);
}

TEST_CASE("highest weight space is stable under place permutations") {
  const HighestWeightSpace hws = highest_weight_space(3, Partition({2, 1}));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      CHECK_NOTHROW(restrict_to_subspace(hws.vectors, place_permutation(hws.ambient, i, j)));
}

TEST_CASE("theta on tensor: one-dimensional cases") {
  std::vector<Rational> z = {Rational(1, 2), Rational(7, 3)};
  const Rational inv = 1 / (z[0] - z[1]);

  const HighestWeightSpace sym = highest_weight_space(2, Partition({2}));
  CHECK(theta_on_tensor<Rational>(sym, 1, z)(0, 0) == inv);

  const HighestWeightSpace alt = highest_weight_space(3, Partition({1, 1}));
  CHECK(theta_on_tensor<Rational>(alt, 1, z)(0, 0) == -inv);
}

TEST_CASE("theta on tensor matches the closed form for (2,1) at z=(0,1,4)") {
  const HighestWeightSpace hws = highest_weight_space(3, Partition({2, 1}));
  std::vector<Rational> z = {0, 1, 4};
  const RationalMatrix th = theta_on_tensor<Rational>(hws, 1, z);
  CHECK(th(0, 0) + th(1, 1) == 0);
  CHECK(th(0, 0) * th(1, 1) - th(0, 1) * th(1, 0) == Rational(-13, 16));
}

TEST_CASE("tensor and Specht spectra agree at random rational z") {
  std::mt19937_64 rng(202);
  for (const Partition& shape :
       {Partition({2, 1}), Partition({2, 2}), Partition({3, 1}), Partition({2, 1, 1})}) {
    const int n_points = shape.n();
    const SpechtRep rep = build_rep(shape);
    const HighestWeightSpace hws = highest_weight_space(shape.rows() + 1, shape);
    for (int trial = 0; trial < 3; ++trial) {
      const auto z = random_distinct_rationals(rng, n_points, -20, 20, 6);
      for (int i = 1; i <= n_points; ++i) {
        const auto lhs = sorted_real_spectrum(to_complex_matrix(theta_on_tensor<Rational>(hws, i, z)));
        const auto rhs = sorted_real_spectrum(to_complex_matrix(theta_matrix<Rational>(rep, i, z)));
        REQUIRE(lhs.size() == rhs.size());
        for (std::size_t k = 0; k < lhs.size(); ++k)
          CHECK(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("place-permutation theta equals the Casimir route") {
  // θ_i = 2n Σ_j Ω_ij/(z_i−z_j) + Σ_j 1/(n(z_i−z_j)) on the weight space
  for (int nn : {3, 4}) {
    const Partition shape({2, 1});
    const WeightBasis wb = weight_basis(nn, shape);
    const RationalMatrix omega = casimir_matrix(nn);
    std::vector<Rational> z = {Rational(1, 2), Rational(-3, 4), Rational(9, 5)};

    for (int i = 1; i <= 3; ++i) {
      RationalMatrix direct = RationalMatrix::Zero(wb.dim(), wb.dim());
      RationalMatrix via_casimir = RationalMatrix::Zero(wb.dim(), wb.dim());
      for (int j = 1; j <= 3; ++j) {
        if (j == i) continue;
        const Rational inv = 1 / (z[i - 1] - z[j - 1]);
        direct += place_permutation(wb, std::min(i, j), std::max(i, j)) * inv;
        via_casimir += apply_two_site(omega, wb, i, j) * (inv * 2 * nn);
        via_casimir += RationalMatrix::Identity(wb.dim(), wb.dim()) * (inv / nn);
      }
      CHECK(is_zero(direct - via_casimir));
    }
  }
}
