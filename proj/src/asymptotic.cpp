#include "bethe/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

namespace bethe {

std::vector<Rational> scalc(const std::vector<Rational>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  for (const Rational& value : a)
    if (value < 0) throw std::invalid_argument("scalc: negative a");
  if (a[n - 1] <= 0) throw std::invalid_argument("scalc: last a must be positive");

  // tail_j = Σ_{k=j}^n (1 + a_k)
  std::vector<Rational> tail(n + 1, Rational(0));
  for (int j = n; j >= 1; --j) tail[j - 1] = tail[j] + 1 + a[j - 1];

  std::vector<Rational> s(n);
  Rational product = 1;
  for (int i = 1; i <= n; ++i) {
    if (tail[i - 1] == 0) throw std::logic_error("scalc: zero tail sum");
    product *= 1 - 1 / tail[i - 1];
    s[i - 1] = product;
  }
  return s;
}

std::vector<Rational> scalc_residuals(const std::vector<Rational>& a,
                                      const std::vector<Rational>& s) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("scalc_residuals: size mismatch");
  std::vector<Rational> res(n);
  for (int i = 1; i <= n; ++i) {
    const Rational prev = (i == 1) ? Rational(1) : s[i - 2];
    Rational r = a[i - 1] / s[i - 1] - 1 / (prev - s[i - 1]);
    if (i < n) r += 1 / (s[i - 1] - s[i]);
    res[i - 1] = r;
  }
  return res;
}

std::vector<Rational> attach_box(const Partition& previous, int row) {
  if (row < 1 || row > previous.rows() + 1)
    throw std::invalid_argument("attach_box: row " + std::to_string(row) +
                                " not addable to shape " + previous.to_string());
  if (row >= 2 && previous.part(row) + 1 > previous.part(row - 1))
    throw std::invalid_argument("attach_box: adding at row " + std::to_string(row) +
                                " breaks shape " + previous.to_string());
  if (row == 1) return {};
  std::vector<Rational> a(row - 1);
  for (int j = 1; j <= row - 1; ++j) a[j - 1] = previous.part(j) - previous.part(j + 1);
  return scalc(a);
}

BetheConfiguration AsymptoticSeed::configuration() const {
  int max_level = 0;
  for (const auto& coord : coordinates) max_level = std::max(max_level, coord.level);
  BetheConfiguration cfg;
  cfg.levels.resize(max_level);
  for (const auto& coord : coordinates) cfg.levels[coord.level - 1].push_back(coord.value);
  return cfg;
}

AsymptoticSeed asymptotic_seed(const StandardTableau& tableau, const std::vector<Complex>& z,
                               double zone_ratio) {
  const int n = tableau.entry_count();
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("asymptotic_seed: z size mismatch");

  AsymptoticSeed seed;
  seed.tableau = tableau;
  seed.z = z;
  seed.zone_ok = true;
  for (int i = 0; i + 1 < n; ++i)
    if (std::abs(z[i + 1]) < zone_ratio * std::abs(z[i])) seed.zone_ok = false;

  for (int entry = 2; entry <= n; ++entry) {
    const int row = tableau.row_of(entry);
    if (row == 1) continue;
    const Partition previous = restricted_shape(tableau, entry - 1);
    const std::vector<Rational> ratios = attach_box(previous, row);
    for (int level = 1; level <= row - 1; ++level) {
      SeedCoordinate coord;
      coord.level = level;
      coord.creating_entry = entry;
      coord.beta = ratios[level - 1];
      coord.value = z[entry - 1] * to_double(coord.beta);
      seed.coordinates.push_back(coord);
    }
  }
  return seed;
}

ComplexVector predicted_eigenvalues(const StandardTableau& tableau,
                                    const std::vector<Complex>& z) {
  const int n = tableau.entry_count();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("predicted_eigenvalues: z size mismatch");
  ComplexVector out(n);
  const std::vector<int> c = content_vector(tableau);
  for (int j = 0; j < n; ++j) out[j] = static_cast<double>(c[j]) / z[j];
  return out;
}

}  // namespace bethe
