#include "bethe/tensor_oracle.hpp"

#include <algorithm>

namespace bethe {

namespace {

/// Matrix unit e_{ab} (1-based) on C^n.
RationalMatrix matrix_unit(int n, int a, int b) {
  RationalMatrix m = RationalMatrix::Zero(n, n);
  m(a - 1, b - 1) = 1;
  return m;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out = RationalMatrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

RationalMatrix casimir_matrix(int n) {
  if (n < 2) throw std::invalid_argument("casimir_matrix: need n >= 2");
  RationalMatrix omega = RationalMatrix::Zero(n * n, n * n);

  // Root part: e_ab pairs with e_ba/2n under the Killing form.
  const Rational half_inv(1, 2 * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      omega += kron(matrix_unit(n, a, b), matrix_unit(n, b, a)) * half_inv;
    }

  // Cartan part: h_a = e_aa − e_nn with dual (1/2n)(e_aa − (1/n) Σ e_bb).
  RationalMatrix trace_part = RationalMatrix::Zero(n, n);
  for (int b = 1; b <= n; ++b) trace_part += matrix_unit(n, b, b);
  for (int a = 1; a <= n - 1; ++a) {
    RationalMatrix h = matrix_unit(n, a, a) - matrix_unit(n, n, n);
    RationalMatrix h_dual = (matrix_unit(n, a, a) - trace_part * Rational(1, n)) * half_inv;
    omega += kron(h, h_dual);
  }
  return omega;
}

WeightBasis weight_basis(int n, const Partition& shape) {
  if (n < shape.rows()) throw std::invalid_argument("weight_basis: need n >= #rows");
  WeightBasis wb;
  wb.n = n;
  wb.N = shape.n();
  std::vector<int> base;
  for (int r = 1; r <= shape.rows(); ++r) base.insert(base.end(), shape.part(r), r);
  std::sort(base.begin(), base.end());
  do {
    wb.sequences.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  for (std::size_t k = 0; k < wb.sequences.size(); ++k)
    wb.index[wb.sequences[k]] = static_cast<int>(k);
  return wb;
}

RationalMatrix place_permutation(const WeightBasis& wb, int i, int j) {
  if (i < 1 || j < 1 || i > wb.N || j > wb.N) throw std::out_of_range("place_permutation: bad slots");
  RationalMatrix m = RationalMatrix::Zero(wb.dim(), wb.dim());
  for (int col = 0; col < wb.dim(); ++col) {
    std::vector<int> seq = wb.sequences[col];
    std::swap(seq[i - 1], seq[j - 1]);
    m(wb.index.at(seq), col) = 1;
  }
  return m;
}

HighestWeightSpace highest_weight_space(int n, const Partition& shape) {
  if (n <= shape.rows())
    throw std::invalid_argument("highest_weight_space: need dim(V) > #rows(shape)");
  HighestWeightSpace hws;
  hws.shape = shape;
  hws.ambient = weight_basis(n, shape);
  const int dim = hws.ambient.dim();

  // Raising operators e_{k,k+1} send the weight space into sibling weight
  // spaces; stack one block of rows per (k, target sequence).
  std::vector<RationalMatrix> blocks;
  for (int k = 1; k < n; ++k) {
    std::map<std::vector<int>, int> target_index;
    std::vector<std::pair<int, int>> entries;  // (target row, source col)
    for (int col = 0; col < dim; ++col) {
      const auto& seq = hws.ambient.sequences[col];
      for (int pos = 0; pos < hws.ambient.N; ++pos) {
        if (seq[pos] != k + 1) continue;
        std::vector<int> moved = seq;
        moved[pos] = k;
        auto [it, inserted] = target_index.try_emplace(moved, static_cast<int>(target_index.size()));
        entries.emplace_back(it->second, col);
      }
    }
    if (target_index.empty()) continue;
    RationalMatrix block = RationalMatrix::Zero(static_cast<int>(target_index.size()), dim);
    for (const auto& [row, col] : entries) block(row, col) += 1;
    blocks.push_back(std::move(block));
  }

  Eigen::Index total_rows = 0;
  for (const auto& b : blocks) total_rows += b.rows();
  RationalMatrix stacked = RationalMatrix::Zero(std::max<Eigen::Index>(total_rows, 1), dim);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }

  hws.vectors = kernel_basis(stacked);
  const Integer expected = hook_length_dimension(shape);
  if (Integer(hws.dim()) != expected)
    throw std::logic_error("highest_weight_space: dimension " + std::to_string(hws.dim()) +
                           " != hook-length dimension " + expected.get_str());
  return hws;
}

RationalMatrix restrict_to_subspace(const RationalMatrix& basis, const RationalMatrix& action) {
  const RationalMatrix image = action * basis;
  try {
    return solve_exact(basis, image);
  } catch (const std::runtime_error&) {
    throw std::logic_error("restrict_to_subspace: action does not preserve the subspace");
  }
}

}  // namespace bethe
