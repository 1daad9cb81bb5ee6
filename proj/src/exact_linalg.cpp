#include "bethe/exact_linalg.hpp"

#include <stdexcept>

namespace bethe {

std::vector<int> rref_in_place(RationalMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Rational inv = 1 / Rational(m(row, col));
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int rank(RationalMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const std::vector<int> pivots = rref_in_place(r);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  const Eigen::Index null_dim = cols - static_cast<Eigen::Index>(pivots.size());
  RationalMatrix basis = RationalMatrix::Zero(cols, null_dim);
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, out) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], out) = -r(p, free_col);
    ++out;
  }
  return basis;
}

RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: row mismatch");
  RationalMatrix aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  const std::vector<int> pivots = rref_in_place(aug);
  for (int p : pivots) {
    if (p >= a.cols()) throw std::runtime_error("solve_exact: inconsistent linear system");
  }
  RationalMatrix x = RationalMatrix::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x.row(pivots[r]) = aug.block(r, a.cols(), 1, b.cols());
  return x;
}

}  // namespace bethe
