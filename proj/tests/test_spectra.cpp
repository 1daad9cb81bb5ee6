#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bethe/specht.hpp"
#include "bethe/spectra.hpp"

using namespace bethe;

namespace {

std::vector<ComplexMatrix> jm_family(const SpechtRep& rep) {
  std::vector<ComplexMatrix> ops;
  for (int i = 1; i <= rep.points(); ++i) ops.push_back(to_complex_matrix(jm_matrix(rep, i)));
  return ops;
}

std::vector<ComplexMatrix> theta_family(const SpechtRep& rep, const std::vector<Rational>& z) {
  std::vector<ComplexMatrix> ops;
  for (int i = 1; i <= rep.points(); ++i)
    ops.push_back(to_complex_matrix(theta_matrix<Rational>(rep, i, z)));
  return ops;
}

bool has_weight(const JointSpectrum& spectrum, const std::vector<double>& mu, double tol) {
  for (const auto& line : spectrum.weights) {
    double gap = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      gap = std::max(gap, std::abs(line.mu[static_cast<int>(i)] - Complex(mu[i], 0.0)));
    if (gap <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity family has one weight of full multiplicity") {
  const JointSpectrum spectrum = joint_spectrum({ComplexMatrix::Identity(4, 4)}, 1e-10);
  REQUIRE(spectrum.weights.size() == 1);
  CHECK(spectrum.weights[0].multiplicity == 4);
  CHECK(spectrum.weights[0].eigen_dim == 4);
  CHECK(std::abs(spectrum.weights[0].mu[0] - Complex(1.0, 0.0)) < 1e-10);
}

TEST_CASE("joint spectrum of the JM family on W^(2,1)") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  const JointSpectrum spectrum = joint_spectrum(jm_family(rep), 1e-10);
  REQUIRE(spectrum.weights.size() == 2);
  CHECK(has_weight(spectrum, {0, 1, -1}, 1e-9));
  CHECK(has_weight(spectrum, {0, -1, 1}, 1e-9));
  for (const auto& line : spectrum.weights) CHECK(line.multiplicity == 1);
}

TEST_CASE("joint spectrum of the theta family at z=(0,1,4)") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  const JointSpectrum spectrum = joint_spectrum(theta_family(rep, {0, 1, 4}), 1e-10);
  REQUIRE(spectrum.weights.size() == 2);
  const double root = std::sqrt(13.0) / 4.0;
  std::vector<double> firsts = {spectrum.weights[0].mu[0].real(), spectrum.weights[1].mu[0].real()};
  std::sort(firsts.begin(), firsts.end());
  CHECK(firsts[0] == doctest::Approx(-root).epsilon(1e-9));
  CHECK(firsts[1] == doctest::Approx(root).epsilon(1e-9));
}

TEST_CASE("weight bases block-diagonalize the family") {
  const SpechtRep rep = build_rep(Partition({3, 1}));
  const auto ops = jm_family(rep);
  const JointSpectrum spectrum = joint_spectrum(ops, 1e-10);
  CHECK(spectrum.total_multiplicity() == spectrum.ambient_dim);
  for (const auto& line : spectrum.weights)
    for (const auto& op : ops) {
      const ComplexMatrix image = op * line.basis;
      const ComplexMatrix projected = line.basis * (line.basis.adjoint() * image);
      CHECK((image - projected).norm() < 1e-9 * std::max(1.0, op.norm()));
    }
}

TEST_CASE("independent random combinations agree") {
  const SpechtRep rep = build_rep(Partition({2, 2}));
  const std::vector<Rational> z = {Rational(0), Rational(1), Rational(3), Rational(7)};
  const auto ops = theta_family(rep, z);
  const JointSpectrum a = joint_spectrum(ops, 1e-10, 11);
  const JointSpectrum b = joint_spectrum(ops, 1e-10, 222222);
  REQUIRE(a.weights.size() == b.weights.size());
  for (std::size_t k = 0; k < a.weights.size(); ++k) {
    double gap = 0.0;
    for (Eigen::Index i = 0; i < a.weights[k].mu.size(); ++i)
      gap = std::max(gap, std::abs(a.weights[k].mu[i] - b.weights[k].mu[i]));
    CHECK(gap < 1e-9);
  }
}

TEST_CASE("non-commuting input is rejected") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 0, 1, 0, 0;
  b << 0, 0, 1, 0;
  CHECK_THROWS_AS(joint_spectrum({a, b}, 1e-10), std::invalid_argument);
}

TEST_CASE("semisimplicity verdicts") {
  ComplexMatrix diag(3, 3);
  diag.setZero();
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  diag(2, 2) = 2.0;
  CHECK(is_semisimple({diag}, 1e-10).semisimple);

  ComplexMatrix jordan(2, 2);
  jordan << 1, 1, 0, 1;
  const SemisimplicityVerdict bad = is_semisimple({ComplexMatrix::Identity(2, 2), jordan}, 1e-10);
  CHECK(!bad.semisimple);
  REQUIRE(bad.witness.has_value());
  CHECK(std::abs((*bad.witness)[1] - Complex(1.0, 0.0)) < 1e-9);

  std::mt19937_64 rng(606);
  const SpechtRep rep = build_rep(Partition({2, 1, 1}));
  for (int trial = 0; trial < 4; ++trial) {
    const auto z = random_distinct_rationals(rng, 4, -15, 15, 7);
    const SemisimplicityVerdict verdict = is_semisimple(theta_family(rep, z), 1e-9);
    CHECK(verdict.semisimple);
    CHECK(verdict.spectrum.attempts <= 2);
  }
}

TEST_CASE("JM family is semisimple with simple weights on every shape") {
  for (int n = 2; n <= 6; ++n)
    for (const Partition& shape : partitions_of(n)) {
      const SpechtRep rep = build_rep(shape);
      const SemisimplicityVerdict verdict = is_semisimple(jm_family(rep), 1e-9);
      CHECK(verdict.semisimple);
      CHECK(verdict.spectrum.total_multiplicity() == rep.dim());
      for (const auto& line : verdict.spectrum.weights) CHECK(line.multiplicity == 1);
    }
}

TEST_CASE("match_bethe") {
  const SpechtRep rep = build_rep(Partition({2, 1}));
  const JointSpectrum spectrum = joint_spectrum(theta_family(rep, {0, 1, 4}), 1e-10);

  // identical lists: perfect, zero residual
  std::vector<ComplexVector> exact;
  for (const auto& line : spectrum.weights) exact.push_back(line.mu);
  const MatchReport perfect = match_bethe(exact, spectrum, 1e-12);
  CHECK(perfect.success);
  CHECK(perfect.max_residual == 0.0);

  // closed-form tuples match to 1e−9
  const double root = std::sqrt(13.0);
  std::vector<ComplexVector> closed(2, ComplexVector(3));
  {
    // eigenvalues of θ at t = (5±√13)/3: component k = Σ_{m≠k} 1/(z_k−z_m) − 1/(z_k−t)
    std::vector<Complex> z = {0.0, 1.0, 4.0};
    int row = 0;
    for (double sign : {1.0, -1.0}) {
      const Complex t((5.0 + sign * root) / 3.0, 0.0);
      for (int k = 0; k < 3; ++k) {
        Complex acc = 0.0;
        for (int m = 0; m < 3; ++m)
          if (m != k) acc += 1.0 / (z[k] - z[m]);
        closed[row][k] = acc - 1.0 / (z[k] - t);
      }
      ++row;
    }
  }
  const MatchReport matched = match_bethe(closed, spectrum, 1e-9);
  CHECK(matched.success);
  CHECK(matched.max_residual < 1e-9);

  // a perturbed prediction is reported, not matched
  std::vector<ComplexVector> off = exact;
  off[0][0] += Complex(1e-3, 0.0);
  const MatchReport failed = match_bethe(off, spectrum, 1e-6);
  CHECK(!failed.success);
  CHECK(failed.unmatched_predicted.size() == 1);
  CHECK(failed.unmatched_spectrum.size() == 1);

  const MatchReport loose = match_bethe(off, spectrum, 1e-2);
  CHECK(loose.success);
  CHECK(loose.max_residual == doctest::Approx(1e-3).epsilon(0.01));
}
