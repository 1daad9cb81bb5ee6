#include "bethe/master_function.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bethe {

namespace {

std::string coord_name(int level, int j) {
  return "t_" + std::to_string(level) + "^(" + std::to_string(j + 1) + ")";
}

bool close(Complex a, Complex b, double min_sep) {
  return std::abs(a - b) <= min_sep * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace

int BetheConfiguration::total() const {
  int sum = 0;
  for (const auto& level : levels) sum += static_cast<int>(level.size());
  return sum;
}

std::vector<int> BetheConfiguration::level_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(levels.size());
  for (const auto& level : levels) sizes.push_back(static_cast<int>(level.size()));
  return sizes;
}

ComplexVector BetheConfiguration::flatten() const {
  ComplexVector flat(total());
  Eigen::Index at = 0;
  for (const auto& level : levels)
    for (Complex value : level) flat[at++] = value;
  return flat;
}

BetheConfiguration BetheConfiguration::unflatten(const std::vector<int>& sizes,
                                                 const ComplexVector& flat) {
  BetheConfiguration cfg;
  Eigen::Index at = 0;
  for (int size : sizes) {
    cfg.levels.emplace_back();
    for (int j = 0; j < size; ++j) cfg.levels.back().push_back(flat[at++]);
  }
  if (at != flat.size()) throw std::invalid_argument("unflatten: size mismatch");
  return cfg;
}

BetheConfiguration BetheConfiguration::empty_for(const WeightData& wd) {
  BetheConfiguration cfg;
  cfg.levels.resize(wd.L);
  return cfg;
}

std::optional<std::string> find_collision(const BetheConfiguration& t,
                                          const std::vector<Complex>& z, double min_sep) {
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      if (close(z[a], z[b], min_sep))
        return "z_" + std::to_string(a + 1) + " ~ z_" + std::to_string(b + 1);

  for (int i = 0; i < t.level_count(); ++i) {
    const auto& level = t.levels[i];
    for (std::size_t j = 0; j < level.size(); ++j) {
      for (std::size_t l = j + 1; l < level.size(); ++l)
        if (close(level[j], level[l], min_sep))
          return coord_name(i + 1, j) + " ~ " + coord_name(i + 1, l);
      if (i + 1 < t.level_count()) {
        for (std::size_t l = 0; l < t.levels[i + 1].size(); ++l)
          if (close(level[j], t.levels[i + 1][l], min_sep))
            return coord_name(i + 1, j) + " ~ " + coord_name(i + 2, l);
      }
    }
  }
  if (!t.levels.empty()) {
    for (std::size_t j = 0; j < t.levels[0].size(); ++j)
      for (std::size_t k = 0; k < z.size(); ++k)
        if (close(t.levels[0][j], z[k], min_sep))
          return coord_name(1, j) + " ~ z_" + std::to_string(k + 1);
  }
  return std::nullopt;
}

double min_separation(const BetheConfiguration& t, const std::vector<Complex>& z) {
  const Eigen::VectorXd separations = coordinate_separations(t, z);
  return separations.size() ? separations.minCoeff() : std::numeric_limits<double>::infinity();
}

Eigen::VectorXd coordinate_separations(const BetheConfiguration& t,
                                       const std::vector<Complex>& z) {
  const std::vector<int> sizes = t.level_sizes();
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];

  Eigen::VectorXd best =
      Eigen::VectorXd::Constant(t.total(), std::numeric_limits<double>::infinity());
  auto meet = [&](int a, int b, double dist) {
    best[a] = std::min(best[a], dist);
    if (b >= 0) best[b] = std::min(best[b], dist);
  };
  for (int i = 0; i < t.level_count(); ++i) {
    const auto& level = t.levels[i];
    for (std::size_t j = 0; j < level.size(); ++j) {
      const int a = offset[i] + static_cast<int>(j);
      for (std::size_t l = j + 1; l < level.size(); ++l)
        meet(a, offset[i] + static_cast<int>(l), std::abs(level[j] - level[l]));
      if (i + 1 < t.level_count())
        for (std::size_t l = 0; l < t.levels[i + 1].size(); ++l)
          meet(a, offset[i + 1] + static_cast<int>(l), std::abs(level[j] - t.levels[i + 1][l]));
      if (i == 0)
        for (Complex zk : z) meet(a, -1, std::abs(level[j] - zk));
    }
  }
  return best;
}

Rational WeightSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("WeightSystem::inner: coordinate length mismatch");
  long dot = 0, sum_a = 0, sum_b = 0;
  for (int i = 0; i < n; ++i) {
    dot += static_cast<long>(a[i]) * b[i];
    sum_a += a[i];
    sum_b += b[i];
  }
  Rational first(dot, 2 * n), second(sum_a * sum_b, 2L * n * n);
  first.canonicalize();
  second.canonicalize();
  return first - second;
}

std::vector<int> WeightSystem::simple_root(int i) const {
  if (i < 1 || i >= n) throw std::out_of_range("simple_root: index out of range");
  std::vector<int> alpha(n, 0);
  alpha[i - 1] = 1;
  alpha[i] = -1;
  return alpha;
}

WeightSystem WeightSystem::vector_reps(int n, int N, std::vector<int> m) {
  WeightSystem ws;
  ws.n = n;
  std::vector<int> l1(n, 0);
  l1[0] = 1;
  ws.weights.assign(N, l1);
  m.resize(n - 1, 0);
  ws.m = std::move(m);
  return ws;
}

namespace {

Complex checked_log(Complex diff, const std::string& lhs, const std::string& rhs) {
  if (diff == Complex(0.0, 0.0))
    throw std::domain_error("master function: coincident " + lhs + " and " + rhs);
  return std::log(diff);
}

}  // namespace

Complex eval_S_general(const WeightSystem& ws, const BetheConfiguration& t,
                       const std::vector<Complex>& z) {
  const int N = static_cast<int>(z.size());
  if (static_cast<int>(ws.weights.size()) != N)
    throw std::invalid_argument("eval_S_general: weight count mismatch");
  if (t.level_count() > ws.n - 1)
    throw std::invalid_argument("eval_S_general: more levels than simple roots");

  Complex s = 0.0;
  for (int k = 0; k < N; ++k)
    for (int l = k + 1; l < N; ++l)
      s += to_double(ws.inner(ws.weights[k], ws.weights[l])) *
           checked_log(z[k] - z[l], "z_" + std::to_string(k + 1), "z_" + std::to_string(l + 1));

  for (int k = 0; k < N; ++k)
    for (int i = 0; i < t.level_count(); ++i) {
      const double coeff = to_double(ws.inner(ws.weights[k], ws.simple_root(i + 1)));
      for (std::size_t j = 0; j < t.levels[i].size(); ++j)
        s -= coeff * checked_log(z[k] - t.levels[i][j], "z_" + std::to_string(k + 1),
                                 coord_name(i + 1, j));
    }

  // ordered pairs (i,j) < (k,l) in the lexicographic coordinate order
  for (int i = 0; i < t.level_count(); ++i)
    for (std::size_t j = 0; j < t.levels[i].size(); ++j)
      for (int k = i; k < t.level_count(); ++k) {
        const double coeff =
            to_double(ws.inner(ws.simple_root(i + 1), ws.simple_root(k + 1)));
        if (coeff == 0.0) continue;
        const std::size_t l_start = (k == i) ? j + 1 : 0;
        for (std::size_t l = l_start; l < t.levels[k].size(); ++l)
          s += coeff * checked_log(t.levels[i][j] - t.levels[k][l], coord_name(i + 1, j),
                                   coord_name(k + 1, l));
      }
  return s;
}

Complex eval_S2(int n, const BetheConfiguration& t, const std::vector<Complex>& z) {
  const int N = static_cast<int>(z.size());
  const double zz_coeff = static_cast<double>(n - 1) / (2.0 * n * n);
  const double zt_coeff = 1.0 / (2.0 * n);
  const double same_coeff = 1.0 / n;
  const double adj_coeff = 1.0 / (2.0 * n);

  Complex s = 0.0;
  for (int k = 0; k < N; ++k)
    for (int l = k + 1; l < N; ++l)
      s += zz_coeff * checked_log(z[k] - z[l], "z_" + std::to_string(k + 1),
                                  "z_" + std::to_string(l + 1));
  if (!t.levels.empty())
    for (int k = 0; k < N; ++k)
      for (std::size_t j = 0; j < t.levels[0].size(); ++j)
        s -= zt_coeff * checked_log(z[k] - t.levels[0][j], "z_" + std::to_string(k + 1),
                                    coord_name(1, j));
  for (int i = 0; i < t.level_count(); ++i)
    for (std::size_t j = 0; j < t.levels[i].size(); ++j)
      for (std::size_t l = j + 1; l < t.levels[i].size(); ++l)
        s += same_coeff * checked_log(t.levels[i][j] - t.levels[i][l], coord_name(i + 1, j),
                                      coord_name(i + 1, l));
  for (int i = 0; i + 1 < t.level_count(); ++i)
    for (std::size_t j = 0; j < t.levels[i].size(); ++j)
      for (std::size_t l = 0; l < t.levels[i + 1].size(); ++l)
        s -= adj_coeff * checked_log(t.levels[i][j] - t.levels[i + 1][l], coord_name(i + 1, j),
                                     coord_name(i + 2, l));
  return s;
}

ComplexVector grad_z_S2(int n, const BetheConfiguration& t, const std::vector<Complex>& z) {
  const int N = static_cast<int>(z.size());
  const double zz_coeff = static_cast<double>(n - 1) / (2.0 * n * n);
  const double zt_coeff = 1.0 / (2.0 * n);
  ComplexVector g = ComplexVector::Zero(N);
  for (int k = 0; k < N; ++k) {
    for (int l = 0; l < N; ++l) {
      if (l == k) continue;
      g[k] += zz_coeff / (z[k] - z[l]);
    }
    if (!t.levels.empty())
      for (Complex u : t.levels[0]) g[k] -= zt_coeff / (z[k] - u);
  }
  return g;
}

Complex eval_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z) {
  const int N = static_cast<int>(z.size());
  Complex s = 0.0;
  for (int k = 0; k < N; ++k)
    for (int l = k + 1; l < N; ++l)
      s += checked_log(z[k] - z[l], "z_" + std::to_string(k + 1), "z_" + std::to_string(l + 1));
  if (!t.levels.empty())
    for (int k = 0; k < N; ++k)
      for (std::size_t j = 0; j < t.levels[0].size(); ++j)
        s -= checked_log(z[k] - t.levels[0][j], "z_" + std::to_string(k + 1), coord_name(1, j));
  for (int i = 0; i < t.level_count(); ++i)
    for (std::size_t j = 0; j < t.levels[i].size(); ++j)
      for (std::size_t l = j + 1; l < t.levels[i].size(); ++l)
        s += 2.0 * checked_log(t.levels[i][j] - t.levels[i][l], coord_name(i + 1, j),
                               coord_name(i + 1, l));
  for (int i = 0; i + 1 < t.level_count(); ++i)
    for (std::size_t j = 0; j < t.levels[i].size(); ++j)
      for (std::size_t l = 0; l < t.levels[i + 1].size(); ++l)
        s -= checked_log(t.levels[i][j] - t.levels[i + 1][l], coord_name(i + 1, j),
                         coord_name(i + 2, l));
  return s;
}

namespace {

/// Cold path for vanishing denominators; the hot loops only branch on zero.
[[noreturn]] void raise_collision(const std::string& lhs, const std::string& rhs) {
  throw std::domain_error("master function: coincident " + lhs + " and " + rhs);
}

}  // namespace

ComplexVector grad_t_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z) {
  ComplexVector g = ComplexVector::Zero(t.total());
  Eigen::Index at = 0;
  for (int i = 0; i < t.level_count(); ++i) {
    for (std::size_t j = 0; j < t.levels[i].size(); ++j, ++at) {
      const Complex u = t.levels[i][j];
      Complex acc = 0.0;
      if (i == 0)
        for (std::size_t k = 0; k < z.size(); ++k) {
          const Complex d = z[k] - u;
          if (d == Complex(0.0, 0.0)) raise_collision("z_" + std::to_string(k + 1), coord_name(1, j));
          acc += 1.0 / d;
        }
      for (std::size_t l = 0; l < t.levels[i].size(); ++l) {
        if (l == j) continue;
        const Complex d = u - t.levels[i][l];
        if (d == Complex(0.0, 0.0)) raise_collision(coord_name(i + 1, j), coord_name(i + 1, l));
        acc += 2.0 / d;
      }
      if (i > 0)
        for (std::size_t l = 0; l < t.levels[i - 1].size(); ++l) {
          const Complex d = u - t.levels[i - 1][l];
          if (d == Complex(0.0, 0.0)) raise_collision(coord_name(i + 1, j), coord_name(i, l));
          acc -= 1.0 / d;
        }
      if (i + 1 < t.level_count())
        for (std::size_t l = 0; l < t.levels[i + 1].size(); ++l) {
          const Complex d = u - t.levels[i + 1][l];
          if (d == Complex(0.0, 0.0)) raise_collision(coord_name(i + 1, j), coord_name(i + 2, l));
          acc -= 1.0 / d;
        }
      g[at] = acc;
    }
  }
  return g;
}

ComplexVector grad_z_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z) {
  const int N = static_cast<int>(z.size());
  ComplexVector g = ComplexVector::Zero(N);
  for (int k = 0; k < N; ++k) {
    Complex acc = 0.0;
    for (int l = 0; l < N; ++l) {
      if (l == k) continue;
      const Complex d = z[k] - z[l];
      if (d == Complex(0.0, 0.0))
        raise_collision("z_" + std::to_string(k + 1), "z_" + std::to_string(l + 1));
      acc += 1.0 / d;
    }
    if (!t.levels.empty())
      for (std::size_t j = 0; j < t.levels[0].size(); ++j) {
        const Complex d = z[k] - t.levels[0][j];
        if (d == Complex(0.0, 0.0)) raise_collision("z_" + std::to_string(k + 1), coord_name(1, j));
        acc -= 1.0 / d;
      }
    g[k] = acc;
  }
  return g;
}

ComplexMatrix hessian_t_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z) {
  const int dim = t.total();
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

  const std::vector<int> sizes = t.level_sizes();
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];

  // c·log(x_a − x_b): H_aa,H_bb −= c/Δ², H_ab,H_ba += c/Δ².
  auto add_pair = [&](int a, int b, Complex delta, double c) {
    const Complex w = c / (delta * delta);
    h(a, a) -= w;
    h(b, b) -= w;
    h(a, b) += w;
    h(b, a) += w;
  };

  for (int i = 0; i < t.level_count(); ++i) {
    for (std::size_t j = 0; j < t.levels[i].size(); ++j) {
      const int a = offset[i] + static_cast<int>(j);
      const Complex u = t.levels[i][j];
      if (i == 0)
        for (std::size_t k = 0; k < z.size(); ++k) {
          const Complex d = z[k] - u;  // c = −1 term: H_aa += 1/d²
          if (d == Complex(0.0, 0.0))
            throw std::domain_error("hessian: coincident z and " + coord_name(1, j));
          h(a, a) += 1.0 / (d * d);
        }
      for (std::size_t l = j + 1; l < t.levels[i].size(); ++l)
        add_pair(a, offset[i] + static_cast<int>(l), u - t.levels[i][l], 2.0);
      if (i + 1 < t.level_count())
        for (std::size_t l = 0; l < t.levels[i + 1].size(); ++l)
          add_pair(a, offset[i + 1] + static_cast<int>(l), u - t.levels[i + 1][l], -1.0);
    }
  }
  return h;
}

ComplexMatrix mixed_tz_Sprime(const BetheConfiguration& t, const std::vector<Complex>& z) {
  const int dim = t.total();
  const int N = static_cast<int>(z.size());
  ComplexMatrix m = ComplexMatrix::Zero(dim, N);
  if (t.levels.empty()) return m;
  for (std::size_t j = 0; j < t.levels[0].size(); ++j)
    for (int k = 0; k < N; ++k) {
      const Complex d = z[k] - t.levels[0][j];
      if (d == Complex(0.0, 0.0))
        throw std::domain_error("mixed hessian: coincident z and " + coord_name(1, j));
      m(static_cast<int>(j), k) = -1.0 / (d * d);
    }
  return m;
}

SingularValueBounds singular_value_bounds(const ComplexMatrix& m) {
  SingularValueBounds out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.min_sv = out.max_sv = 1.0;  // empty matrix: vacuously nonsingular
    return out;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  out.max_sv = svd.singularValues()(0);
  out.min_sv = svd.singularValues()(svd.singularValues().size() - 1);
  return out;
}

bool is_nondegenerate(const ComplexMatrix& hessian, double rel_tol, SingularValueBounds* bounds) {
  const SingularValueBounds sv = singular_value_bounds(hessian);
  if (bounds) *bounds = sv;
  if (hessian.rows() == 0) return true;
  return sv.min_sv > rel_tol * sv.max_sv;
}

}  // namespace bethe
