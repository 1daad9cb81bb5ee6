#include "bethe/specht.hpp"

#include <algorithm>

#include "bethe/exact_linalg.hpp"

namespace bethe {

namespace {

int permutation_parity(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<std::vector<int>> columns_of(const StandardTableau& t) {
  const int width = t.shape.rows() ? t.shape.parts[0] : 0;
  std::vector<std::vector<int>> cols(width);
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return cols;
}

/// All row assignments with λ_r entries in row r, in lexicographic order.
std::vector<std::vector<int>> all_tabloids(const Partition& shape) {
  std::vector<int> base;
  for (int r = 1; r <= shape.rows(); ++r)
    base.insert(base.end(), shape.part(r), r);
  std::sort(base.begin(), base.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

PolytabloidVector polytabloid(const StandardTableau& t) {
  const int n = t.entry_count();
  const auto cols = columns_of(t);

  PolytabloidVector v;
  // Cartesian product of per-column permutations; the assignment sends the
  // box in row r of column c to perm_c[r].
  std::vector<std::vector<int>> perms(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    perms[c] = cols[c];
    std::sort(perms[c].begin(), perms[c].end());
  }

  std::vector<int> row_of(n, 0);
  auto emit = [&]() {
    int sign = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t r = 0; r < cols[c].size(); ++r) row_of[perms[c][r] - 1] = static_cast<int>(r) + 1;
      // parity of perms[c] relative to the column's own (sorted) order
      sign *= permutation_parity(perms[c]);
    }
    v.terms[row_of] += sign;
  };

  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cols.size()) {
      emit();
      return;
    }
    std::sort(perms[c].begin(), perms[c].end());
    do {
      self(self, c + 1);
    } while (std::next_permutation(perms[c].begin(), perms[c].end()));
  };
  rec(rec, 0);
  return v;
}

RationalMatrix SpechtRep::transposition(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > points() || i == j) throw std::out_of_range("transposition: bad indices");
  RationalMatrix m = generator(i);
  for (int k = i + 2; k <= j; ++k) {
    const RationalMatrix& g = generator(k - 1);
    m = g * m * g;
  }
  return m;
}

SpechtRep build_rep(const Partition& shape) {
  SpechtRep rep;
  rep.shape = shape;
  rep.basis = enumerate_standard_tableaux(shape);
  const int n = shape.n();
  const int d = rep.dim();

  const auto tabloids = all_tabloids(shape);
  std::map<std::vector<int>, int> tabloid_index;
  for (std::size_t k = 0; k < tabloids.size(); ++k) tabloid_index[tabloids[k]] = static_cast<int>(k);
  const int tab_dim = static_cast<int>(tabloids.size());

  RationalMatrix v = RationalMatrix::Zero(tab_dim, d);
  std::vector<PolytabloidVector> polys(d);
  for (int col = 0; col < d; ++col) {
    polys[col] = polytabloid(rep.basis[col]);
    for (const auto& [key, coeff] : polys[col].terms) v(tabloid_index.at(key), col) = coeff;
  }

  // Right-hand sides for every adjacent generator at once: s_k acts on a
  // tabloid by swapping the rows of entries k and k+1.
  RationalMatrix w = RationalMatrix::Zero(tab_dim, d * (n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    for (int col = 0; col < d; ++col) {
      for (const auto& [key, coeff] : polys[col].terms) {
        std::vector<int> moved = key;
        std::swap(moved[k - 1], moved[k]);
        w(tabloid_index.at(moved), (k - 1) * d + col) += coeff;
      }
    }
  }

  RationalMatrix solved;
  try {
    solved = solve_exact(v, w);
  } catch (const std::runtime_error&) {
    throw std::logic_error("build_rep: generator image escaped the polytabloid span");
  }
  rep.adjacent.reserve(n - 1);
  for (int k = 1; k <= n - 1; ++k) rep.adjacent.push_back(solved.middleCols((k - 1) * d, d));
  return rep;
}

RationalMatrix jm_matrix(const SpechtRep& rep, int i) {
  if (i < 1 || i > rep.points()) throw std::out_of_range("jm_matrix: index out of range");
  RationalMatrix m = RationalMatrix::Zero(rep.dim(), rep.dim());
  for (int j = 1; j < i; ++j) m += rep.transposition(j, i);
  return m;
}

YoungBasis young_basis(const SpechtRep& rep) {
  const int d = rep.dim();
  const int n = rep.points();

  std::vector<RationalMatrix> jm(n + 1);
  for (int i = 2; i <= n; ++i) jm[i] = jm_matrix(rep, i);

  YoungBasis yb;
  yb.vectors = RationalMatrix::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    const std::vector<int> c = content_vector(rep.basis[col]);
    RationalMatrix space = RationalMatrix::Identity(d, d);
    for (int i = 2; i <= n && space.cols() > 0; ++i) {
      RationalMatrix shifted = jm[i] * space;
      for (Eigen::Index r = 0; r < space.rows(); ++r)
        for (Eigen::Index cc = 0; cc < space.cols(); ++cc) shifted(r, cc) -= Rational(c[i - 1]) * space(r, cc);
      space = space * kernel_basis(shifted);
    }
    if (space.cols() != 1)
      throw std::logic_error("young_basis: joint eigenspace dimension " +
                             std::to_string(space.cols()) + " for tableau " + std::to_string(col));
    // normalize so the first nonzero coordinate is 1
    Rational lead = 0;
    for (Eigen::Index r = 0; r < d; ++r) {
      if (space(r, 0) != 0) {
        lead = space(r, 0);
        break;
      }
    }
    yb.vectors.col(col) = space.col(0) / lead;
    yb.contents.push_back(c);
  }
  return yb;
}

}  // namespace bethe
