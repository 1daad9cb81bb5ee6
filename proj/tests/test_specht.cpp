#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "bethe/specht.hpp"

using namespace bethe;

namespace {

StandardTableau make_tableau(const std::vector<std::vector<int>>& rows) {
  StandardTableau t;
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  t.shape = Partition(parts);
  t.rows = rows;
  REQUIRE(t.is_standard());
  return t;
}

bool is_zero(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

std::vector<Rational> rational_nodes(std::mt19937_64& rng, int count) {
  return random_distinct_rationals(rng, count, -30, 30, 8);
}

}  // namespace

TEST_CASE("polytabloid structure") {
  // single row: trivial column group
  const auto row = enumerate_standard_tableaux(Partition({3}))[0];
  const auto pv_row = polytabloid(row);
  CHECK(pv_row.terms.size() == 1);
  CHECK(pv_row.terms.at({1, 1, 1}) == 1);

  // column of two: e_(1,2) − e_(2,1)
  const auto pv_col = polytabloid(make_tableau({{1}, {2}}));
  CHECK(pv_col.terms.size() == 2);
  CHECK(pv_col.terms.at({1, 2}) == 1);
  CHECK(pv_col.terms.at({2, 1}) == -1);

  // (2,1) with rows (1,3)/(2): column group swaps 1 and 2
  const auto pv = polytabloid(make_tableau({{1, 3}, {2}}));
  CHECK(pv.terms.size() == 2);
  CHECK(pv.terms.at({1, 2, 1}) == 1);
  CHECK(pv.terms.at({2, 1, 1}) == -1);
}

TEST_CASE("polytabloid term count is the product of column factorials") {
  for (const Partition& shape : {Partition({2, 2}), Partition({3, 2, 1}), Partition({1, 1, 1, 1})}) {
    std::vector<int> col_len(shape.parts[0], 0);
    for (int r = 0; r < shape.rows(); ++r)
      for (int c = 0; c < shape.parts[r]; ++c) ++col_len[c];
    Integer expected = 1;
    for (int len : col_len) expected *= factorial(len);
    for (const auto& t : enumerate_standard_tableaux(shape)) {
      const auto pv = polytabloid(t);
      CHECK(Integer(static_cast<long>(pv.terms.size())) == expected);
      for (const auto& [key, coeff] : pv.terms) CHECK((coeff == 1 || coeff == -1));
    }
  }
}

TEST_CASE("build_rep on the extreme shapes") {
  const SpechtRep trivial = build_rep(Partition({4}));
  CHECK(trivial.dim() == 1);
  for (int k = 1; k <= 3; ++k) CHECK(trivial.generator(k)(0, 0) == 1);

  const SpechtRep sign = build_rep(Partition({1, 1, 1, 1}));
  CHECK(sign.dim() == 1);
  for (int k = 1; k <= 3; ++k) CHECK(sign.generator(k)(0, 0) == -1);
}

TEST_CASE("build_rep standard representation of S_3") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  CHECK(rep.dim() == 2);
  const RationalMatrix s12 = rep.generator(1);
  CHECK(s12(0, 0) + s12(1, 1) == 0);                              // trace 0
  CHECK(s12(0, 0) * s12(1, 1) - s12(0, 1) * s12(1, 0) == -1);     // det −1
}

TEST_CASE("generator relations hold exactly") {
  for (int n = 2; n <= 5; ++n)
    for (const Partition& shape : partitions_of(n)) {
      const SpechtRep rep = build_rep(shape);
      const RationalMatrix id = RationalMatrix::Identity(rep.dim(), rep.dim());
      for (int k = 1; k < n; ++k) {
        CHECK(is_zero(rep.generator(k) * rep.generator(k) - id));
        if (k + 1 < n) {
          const RationalMatrix &a = rep.generator(k), &b = rep.generator(k + 1);
          CHECK(is_zero(a * b * a - b * a * b));
        }
        for (int l = k + 2; l < n; ++l)
          CHECK(is_zero(rep.generator(k) * rep.generator(l) -
                        rep.generator(l) * rep.generator(k)));
      }
      // transpositions square to the identity through the conjugation chain
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          CHECK(is_zero(rep.transposition(i, j) * rep.transposition(i, j) - id));
    }
}

TEST_CASE("theta on the one-dimensional shapes") {
  std::vector<Rational> z = {Rational(1, 3), Rational(5, 2)};
  const Rational inv = 1 / (z[0] - z[1]);

  const SpechtRep sym = build_rep(Partition({2}));
  CHECK(theta_matrix<Rational>(sym, 1, z)(0, 0) == inv);

  const SpechtRep alt = build_rep(Partition({1, 1}));
  CHECK(theta_matrix<Rational>(alt, 1, z)(0, 0) == -inv);
}

TEST_CASE("theta eigenvalues for (2,1) at z=(0,1,4)") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  std::vector<Rational> z = {0, 1, 4};
  const RationalMatrix th = theta_matrix<Rational>(rep, 1, z);
  // char poly x² − 13/16: eigenvalues ±√13/4
  CHECK(th(0, 0) + th(1, 1) == 0);
  CHECK(th(0, 0) * th(1, 1) - th(0, 1) * th(1, 0) == Rational(-13, 16));

  Eigen::ComplexEigenSolver<ComplexMatrix> eig(to_complex_matrix(th));
  std::vector<double> values = {eig.eigenvalues()(0).real(), eig.eigenvalues()(1).real()};
  std::sort(values.begin(), values.end());
  const double root = std::sqrt(13.0) / 4.0;
  CHECK(values[0] == doctest::Approx(-root).epsilon(1e-12));
  CHECK(values[1] == doctest::Approx(root).epsilon(1e-12));
}

TEST_CASE("theta family commutes and sums to zero exactly") {
  std::mt19937_64 rng(101);
  for (int n = 2; n <= 4; ++n)
    for (const Partition& shape : partitions_of(n)) {
      const SpechtRep rep = build_rep(shape);
      const auto z = rational_nodes(rng, n);
      std::vector<RationalMatrix> theta;
      for (int i = 1; i <= n; ++i) theta.push_back(theta_matrix<Rational>(rep, i, z));
      RationalMatrix sum = RationalMatrix::Zero(rep.dim(), rep.dim());
      for (const auto& th : theta) sum += th;
      CHECK(is_zero(sum));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) CHECK(is_zero(theta[i] * theta[j] - theta[j] * theta[i]));
    }
}

TEST_CASE("theta covariance under scaling and translation") {
  std::mt19937_64 rng(102);
  const SpechtRep rep = build_rep(Partition({2, 1}));
  const auto z = rational_nodes(rng, 3);
  const Rational c(7, 3), d(-2, 5);
  for (int i = 1; i <= 3; ++i) {
    const RationalMatrix base = theta_matrix<Rational>(rep, i, z);
    std::vector<Rational> scaled, shifted;
    for (const Rational& v : z) {
      scaled.push_back(c * v);
      shifted.push_back(v + d);
    }
    CHECK(is_zero(theta_matrix<Rational>(rep, i, scaled) * c - base));
    CHECK(is_zero(theta_matrix<Rational>(rep, i, shifted) - base));
  }
}

TEST_CASE("theta rejects coincident z") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  std::vector<Rational> z = {0, 1, 1};
  CHECK_THROWS_AS(theta_matrix<Rational>(rep, 1, z), std::domain_error);
}

TEST_CASE("jucys-murphy matrices") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  CHECK(is_zero(jm_matrix(rep, 1)));

  // spectra {1,−1} paired as (0,1,−1) and (0,−1,1)
  const RationalMatrix th2 = jm_matrix(rep, 2);
  const RationalMatrix th3 = jm_matrix(rep, 3);
  CHECK(th2(0, 0) + th2(1, 1) == 0);
  CHECK(th2(0, 0) * th2(1, 1) - th2(0, 1) * th2(1, 0) == -1);
  CHECK(is_zero(th2 + th3 - RationalMatrix::Zero(2, 2)));  // Θ_2 + Θ_3 = 0 on W^(2,1)

  const SpechtRep trivial = build_rep(Partition({5}));
  for (int i = 1; i <= 5; ++i) CHECK(jm_matrix(trivial, i)(0, 0) == i - 1);
}

TEST_CASE("young basis diagonalizes the JM family with content eigenvalues") {
  for (int n = 2; n <= 5; ++n)
    for (const Partition& shape : partitions_of(n)) {
      const SpechtRep rep = build_rep(shape);
      const YoungBasis yb = young_basis(rep);
      CHECK(static_cast<int>(yb.contents.size()) == rep.dim());
      for (int col = 0; col < rep.dim(); ++col) {
        CHECK(yb.contents[col] == content_vector(rep.basis[col]));
        for (int i = 2; i <= n; ++i) {
          const RationalMatrix image = jm_matrix(rep, i) * yb.vectors.col(col);
          const RationalMatrix scaled = yb.vectors.col(col) * Rational(yb.contents[col][i - 1]);
          CHECK(is_zero(image - scaled));
        }
      }
    }
}

TEST_CASE("young basis content tuples for (2,2)") {
  const SpechtRep rep = build_rep(Partition({2, 2}));
  const YoungBasis yb = young_basis(rep);
  CHECK(yb.contents[0] == std::vector<int>{0, 1, -1, 0});
  CHECK(yb.contents[1] == std::vector<int>{0, -1, 1, 0});
}

TEST_CASE("JM limit of scaled theta") {
  // z_j = γ^j: the entries of γ^i θ_i − Θ_i shrink like 1/γ
  const SpechtRep rep = build_rep(Partition({2, 1}));
  auto worst_entry = [&](long gamma_value) {
    std::vector<Rational> z;
    Rational power = 1;
    for (int j = 0; j < 3; ++j) {
      power *= gamma_value;
      z.push_back(power);
    }
    double worst = 0.0;
    Rational gamma_i = 1;
    for (int i = 1; i <= 3; ++i) {
      gamma_i *= gamma_value;
      const RationalMatrix diff = theta_matrix<Rational>(rep, i, z) * gamma_i - jm_matrix(rep, i);
      for (Eigen::Index r = 0; r < diff.rows(); ++r)
        for (Eigen::Index c = 0; c < diff.cols(); ++c)
          worst = std::max(worst, std::abs(to_double(diff(r, c))));
    }
    return worst;
  };
  const double e2 = worst_entry(100), e3 = worst_entry(1000), e4 = worst_entry(10000);
  CHECK(e3 < 2e-2);
  CHECK(e2 / e3 == doctest::Approx(10.0).epsilon(0.2));
  CHECK(e3 / e4 == doctest::Approx(10.0).epsilon(0.2));
}
