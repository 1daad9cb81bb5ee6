#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

// Eigen scalar adaptor for GMP rationals, following the custom-scalar recipe
// from the Eigen documentation.
namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace bethe {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline double to_double(const Rational& q) { return q.get_d(); }

/// Bridge between the exact and floating instantiations of templated kernels.
template <typename Scalar>
Scalar scalar_cast(const Rational& q);

template <>
inline Rational scalar_cast<Rational>(const Rational& q) {
  return q;
}
template <>
inline double scalar_cast<double>(const Rational& q) {
  return q.get_d();
}
template <>
inline Complex scalar_cast<Complex>(const Rational& q) {
  return Complex(q.get_d(), 0.0);
}

inline ComplexMatrix to_complex_matrix(const RationalMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j).get_d(), 0.0);
  return out;
}

inline std::vector<Complex> to_complex_points(const std::vector<Rational>& zs) {
  std::vector<Complex> out;
  out.reserve(zs.size());
  for (const Rational& z : zs) out.emplace_back(z.get_d(), 0.0);
  return out;
}

/// Canonical "p/q" form (plain "p" when the denominator is 1).
inline std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  q.canonicalize();
  return q;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Uniform rational with numerator in [lo, hi] and denominator in [1, den_hi].
inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int den_hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, den_hi);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Pairwise-distinct random rational points, e.g. evaluation nodes z.
inline std::vector<Rational> random_distinct_rationals(std::mt19937_64& rng, int count, int lo,
                                                       int hi, int den_hi) {
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational q = random_rational(rng, lo, hi, den_hi);
    bool fresh = true;
    for (const Rational& p : out)
      if (p == q) fresh = false;
    if (fresh) out.push_back(q);
  }
  return out;
}

}  // namespace bethe
