#include "bethe/solver.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "bethe/asymptotic.hpp"

namespace bethe {

namespace {

double inf_norm(const ComplexVector& v) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v[i]));
  return best;
}

double config_scale(const BetheConfiguration& t) {
  double scale = 0.0;
  for (const auto& level : t.levels)
    for (Complex u : level) scale = std::max(scale, std::abs(u));
  return scale;
}

/// Factored t-Hessian with diagonal equilibration; solve() returns −H⁻¹ rhs.
struct HessianSolver {
  Eigen::FullPivLU<ComplexMatrix> lu;
  Eigen::VectorXd d;
  bool invertible = false;

  HessianSolver(const BetheConfiguration& t, const std::vector<Complex>& z) {
    const ComplexMatrix h = hessian_t_Sprime(t, z);
    const Eigen::Index n = h.rows();
    d.resize(n);
    const ComplexVector flat = t.flatten();
    for (Eigen::Index i = 0; i < n; ++i) d[i] = std::abs(flat[i]) + 1.0;
    ComplexMatrix scaled = h;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) scaled(i, j) *= d[i] * d[j];
    lu.compute(scaled);
    invertible = lu.isInvertible();
  }

  ComplexVector solve(const ComplexVector& grad) const {
    if (!invertible)
      throw SolverError(SolverFailure::SingularJacobian, "newton: singular Hessian");
    const Eigen::Index n = d.size();
    ComplexVector rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) rhs[i] = -grad[i] * d[i];
    ComplexVector y = lu.solve(rhs);
    for (Eigen::Index i = 0; i < n; ++i) y[i] *= d[i];
    return y;
  }
};

ComplexVector newton_step(const BetheConfiguration& t, const std::vector<Complex>& z,
                          const ComplexVector& grad) {
  return HessianSolver(t, z).solve(grad);
}

/// Damped Newton iteration without the closing certificate; returns the final
/// iterate and leaves the residual in `residual_out`.
BetheConfiguration newton_iterate(const BetheConfiguration& guess, const std::vector<Complex>& z,
                                  const SolverSettings& settings, double* residual_out,
                                  int* iterations_out) {
  BetheConfiguration t = guess;
  const std::vector<int> sizes = t.level_sizes();
  double residual = 0.0;
  int iterations = 0;
  for (; iterations < settings.max_iter; ++iterations) {
    const ComplexVector grad = grad_t_Sprime(t, z);
    residual = inf_norm(grad);
    ComplexVector step;
    try {
      step = newton_step(t, z, grad);
    } catch (const SolverError&) {
      if (residual <= settings.newton_tol) break;  // converged onto a degenerate point
      throw;
    }
    const double scale = config_scale(t) + 1.0;
    if (residual <= settings.newton_tol && inf_norm(step) <= 1e-14 * scale) break;

    const ComplexVector flat = t.flatten();
    bool placed = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      const BetheConfiguration trial =
          BetheConfiguration::unflatten(sizes, flat + step / std::pow(2.0, halvings));
      if (!find_collision(trial, z, settings.collision_sep)) {
        t = trial;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw SolverError(SolverFailure::CollisionLocked,
                        "newton: damping floor reached without a valid iterate");
  }
  residual = t.total() ? inf_norm(grad_t_Sprime(t, z)) : 0.0;
  if (residual > settings.newton_tol)
    throw SolverError(SolverFailure::MaxIterations,
                      "newton: residual " + std::to_string(residual) + " above tolerance");
  if (residual_out) *residual_out = residual;
  if (iterations_out) *iterations_out = iterations;
  return t;
}

}  // namespace

std::string to_string(SolverFailure kind) {
  switch (kind) {
    case SolverFailure::MaxIterations: return "MaxIterations";
    case SolverFailure::SingularJacobian: return "SingularJacobian";
    case SolverFailure::CollisionLocked: return "CollisionLocked";
    case SolverFailure::StepUnderflow: return "StepUnderflow";
    case SolverFailure::DiagonalCrossing: return "DiagonalCrossing";
  }
  return "Unknown";
}

CriticalPointCertificate certify(const BetheConfiguration& t, const std::vector<Complex>& z) {
  CriticalPointCertificate cert;
  cert.configuration = t;
  cert.z = z;
  cert.residual_norm = t.total() ? inf_norm(grad_t_Sprime(t, z)) : 0.0;
  cert.hessian_sv = singular_value_bounds(hessian_t_Sprime(t, z));
  cert.eigenvalues = grad_z_Sprime(t, z);
  return cert;
}

CriticalPointCertificate newton_solve(const BetheConfiguration& guess,
                                      const std::vector<Complex>& z,
                                      const SolverSettings& settings) {
  if (auto hit = find_collision(guess, z, settings.collision_sep))
    throw std::domain_error("newton_solve: invalid guess, " + *hit);

  if (guess.total() == 0) return certify(guess, z);

  int iterations = 0;
  const BetheConfiguration t = newton_iterate(guess, z, settings, nullptr, &iterations);
  CriticalPointCertificate cert = certify(t, z);
  cert.newton_iterations = iterations;
  return cert;
}

BetheConfiguration canonicalize(BetheConfiguration t) {
  for (auto& level : t.levels)
    std::sort(level.begin(), level.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
  return t;
}

bool same_point(const BetheConfiguration& a, const BetheConfiguration& b, double tol) {
  if (a.level_sizes() != b.level_sizes()) return false;
  const BetheConfiguration ca = canonicalize(a);
  const BetheConfiguration cb = canonicalize(b);
  for (std::size_t i = 0; i < ca.levels.size(); ++i)
    for (std::size_t j = 0; j < ca.levels[i].size(); ++j)
      if (std::abs(ca.levels[i][j] - cb.levels[i][j]) > tol) return false;
  return true;
}

std::vector<Complex> ContinuationPath::at(double s) const {
  auto lerp = [](const std::vector<Complex>& a, const std::vector<Complex>& b, double u) {
    std::vector<Complex> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = (1.0 - u) * a[k] + u * b[k];
    return out;
  };
  if (!detour_mid) return lerp(z_start, z_end, s);
  if (s <= 0.5) return lerp(z_start, *detour_mid, 2.0 * s);
  return lerp(*detour_mid, z_end, 2.0 * s - 1.0);
}

std::vector<Complex> ContinuationPath::velocity(double s) const {
  std::vector<Complex> v(z_start.size());
  if (!detour_mid) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = z_end[k] - z_start[k];
  } else if (s <= 0.5) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = 2.0 * ((*detour_mid)[k] - z_start[k]);
  } else {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = 2.0 * (z_end[k] - (*detour_mid)[k]);
  }
  return v;
}

namespace {

void check_off_diagonal(const std::vector<Complex>& z, double rel_tol, double s) {
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      if (std::abs(z[a] - z[b]) <= rel_tol * (std::abs(z[a]) + std::abs(z[b]) + 1.0))
        throw SolverError(SolverFailure::DiagonalCrossing,
                          "continuation: z_" + std::to_string(a + 1) + " ~ z_" +
                              std::to_string(b + 1) + " at s=" + std::to_string(s),
                          s);
}

/// Exact minimum of |w0 + u(w1−w0)| over u ∈ [0,1].
double segment_min_abs(Complex w0, Complex w1) {
  const Complex d = w1 - w0;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(w0);
  double u = -(w0.real() * d.real() + w0.imag() * d.imag()) / len2;
  u = std::clamp(u, 0.0, 1.0);
  return std::abs(w0 + u * d);
}

/// The linear z-segment between two path samples must stay clear of the big
/// diagonal everywhere, not just at the endpoints. Proximity is judged
/// against the scale of each pair, so widely separated magnitudes do not
/// mask close ones.
void check_segment_off_diagonal(const std::vector<Complex>& z0, const std::vector<Complex>& z1,
                                double rel_tol, double s0, double s1) {
  for (std::size_t a = 0; a < z0.size(); ++a)
    for (std::size_t b = a + 1; b < z0.size(); ++b) {
      const double pair_scale =
          std::max(std::abs(z0[a]) + std::abs(z0[b]), std::abs(z1[a]) + std::abs(z1[b]));
      if (segment_min_abs(z0[a] - z0[b], z1[a] - z1[b]) <= rel_tol * (pair_scale + 1.0))
        throw SolverError(SolverFailure::DiagonalCrossing,
                          "continuation: z_" + std::to_string(a + 1) + " ~ z_" +
                              std::to_string(b + 1) + " between s=" + std::to_string(s0) +
                              " and s=" + std::to_string(s1),
                          s0);
    }
}

}  // namespace

CriticalPointCertificate continue_path(const CriticalPointCertificate& start,
                                       const ContinuationPath& path,
                                       const SolverSettings& settings) {
  check_off_diagonal(path.z_start, settings.diagonal_tol, 0.0);
  check_off_diagonal(path.z_end, settings.diagonal_tol, 1.0);

  double path_length = 0.0;
  for (std::size_t k = 0; k < path.z_start.size(); ++k)
    path_length += std::abs(path.z_end[k] - path.z_start[k]);
  if (path.detour_mid == std::nullopt && path_length == 0.0) return start;

  BetheConfiguration t = start.configuration;
  const std::vector<int> sizes = t.level_sizes();

  if (t.total() == 0) {
    check_segment_off_diagonal(path.z_start, path.detour_mid ? *path.detour_mid : path.z_end,
                               settings.diagonal_tol, 0.0, path.detour_mid ? 0.5 : 1.0);
    if (path.detour_mid)
      check_segment_off_diagonal(*path.detour_mid, path.z_end, settings.diagonal_tol, 0.5, 1.0);
    CriticalPointCertificate cert = certify(t, path.z_end);
    cert.seed_tableau = start.seed_tableau;
    return cert;
  }

  SolverSettings corrector = settings;
  corrector.max_iter = 8;

  double s = 0.0;
  double ds = settings.step_initial;
  while (s < 1.0 - 1e-12) {
    // Tangent of the tracked family at the current point; its length sets how
    // far the Euler linearization can be trusted (a fraction of the distance
    // to the nearest singular configuration).
    const std::vector<Complex> z_now = path.at(s);
    const ComplexVector grad = grad_t_Sprime(t, z_now);
    const ComplexMatrix mixed = mixed_tz_Sprime(t, z_now);
    const std::vector<Complex> vel = path.velocity(s);
    ComplexVector drift = ComplexVector::Zero(grad.size());
    for (Eigen::Index a = 0; a < drift.size(); ++a)
      for (std::size_t k = 0; k < vel.size(); ++k) drift[a] += mixed(a, k) * vel[k];

    const HessianSolver hessian(t, z_now);
    const ComplexVector tangent = hessian.solve(drift);  // dt/ds
    const Eigen::VectorXd separations = coordinate_separations(t, z_now);
    for (Eigen::Index a = 0; a < tangent.size(); ++a) {
      const double rate = std::abs(tangent[a]);
      if (rate > 0.0) ds = std::min(ds, 0.4 * separations[a] / rate);
    }
    ds = std::max(ds, settings.step_min);

    bool accepted = false;
    for (; ds >= settings.step_min; ds *= settings.contract) {
      ds = std::min(ds, 1.0 - s);
      double s_next = s + ds;
      // keep every step inside one linear piece of a detoured path
      if (path.detour_mid && s < 0.5 && s_next > 0.5) s_next = 0.5;
      const std::vector<Complex> z_next = path.at(s_next);
      check_segment_off_diagonal(z_now, z_next, settings.diagonal_tol, s, s_next);

      try {
        const ComplexVector predictor = hessian.solve(grad + drift * (s_next - s));
        const ComplexVector predicted = t.flatten() + predictor;
        const BetheConfiguration guess = BetheConfiguration::unflatten(sizes, predicted);
        if (find_collision(guess, z_next, settings.collision_sep))
          throw SolverError(SolverFailure::CollisionLocked, "predictor collided");

        const BetheConfiguration corrected = newton_iterate(guess, z_next, corrector, nullptr, nullptr);

        // the corrector may only polish the prediction, not hop branches;
        // checked coordinate by coordinate so mixed scales stay independent
        const ComplexVector moved = corrected.flatten() - predicted;
        const ComplexVector flat = t.flatten();
        for (Eigen::Index a = 0; a < moved.size(); ++a)
          if (std::abs(moved[a]) >
              0.5 * std::abs(predictor[a]) + 1e-9 * (std::abs(flat[a]) + 1.0))
            throw SolverError(SolverFailure::StepUnderflow, "corrector left the trust region");

        t = corrected;
        s = s_next;
        accepted = true;
        break;
      } catch (const SolverError&) {
      } catch (const std::domain_error&) {
      }
    }
    if (!accepted)
      throw SolverError(SolverFailure::StepUnderflow,
                        "continuation: step underflow at s=" + std::to_string(s), s);
    ds = std::min(ds * settings.expand, settings.step_max);
  }

  // close exactly on the endpoint
  t = newton_iterate(t, path.z_end, settings, nullptr, nullptr);
  CriticalPointCertificate cert = certify(t, path.z_end);
  cert.seed_tableau = start.seed_tableau;
  return cert;
}

namespace {

std::vector<Complex> gamma_nodes(double gamma, int n) {
  std::vector<Complex> z(n);
  double v = 1.0;
  for (int j = 0; j < n; ++j) {
    v *= gamma;
    z[j] = Complex(v, 0.0);
  }
  return z;
}

}  // namespace

FindAllResult find_all_critical_points(const Partition& shape, const std::vector<Complex>& z,
                                       const SolverSettings& settings) {
  FindAllResult result;
  result.shape = shape;
  result.z = z;
  result.expected_count = hook_length_dimension(shape);

  const int n = shape.n();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("find_all_critical_points: z size mismatch");
  check_off_diagonal(z, settings.diagonal_tol, -1.0);

  const WeightData wd = weight_data(shape);
  const std::vector<StandardTableau> tableaux = enumerate_standard_tableaux(shape);

  if (wd.total() == 0) {
    CriticalPointCertificate cert = certify(BetheConfiguration::empty_for(wd), z);
    cert.seed_tableau = 0;
    result.points.push_back(cert);
    return result;
  }

  // The critical system sees z only as a set, so transport targets the
  // lexicographically sorted ordering: pairwise differences from the
  // increasing seed nodes are then positive combinations and the straight
  // path never meets the big diagonal. Certificates are issued against the
  // caller's ordering afterwards.
  std::vector<Complex> z_sorted = z;
  std::sort(z_sorted.begin(), z_sorted.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  double target_scale = 0.0;
  for (Complex zk : z) target_scale = std::max(target_scale, std::abs(zk));

  for (std::size_t k = 0; k < tableaux.size(); ++k) {
    const int index = static_cast<int>(k);
    try {
      double gamma = settings.gamma;
      std::vector<Complex> z_seed = gamma_nodes(gamma, n);
      const AsymptoticSeed seed = asymptotic_seed(tableaux[k], z_seed, settings.zone_ratio);
      CriticalPointCertificate cert = newton_solve(seed.configuration(), z_seed, settings);
      cert.seed_tableau = index;

      // Shrink the realization scale geometrically before the final leg; each
      // leg is an ordinary linear path.
      while (gamma > 4.0 && std::pow(gamma / 4.0, n) > 4.0 * (target_scale + 1.0)) {
        const double gamma_next = std::max(gamma / 4.0, 4.0);
        const std::vector<Complex> z_next = gamma_nodes(gamma_next, n);
        cert = continue_path(cert, ContinuationPath{cert.z, z_next, std::nullopt}, settings);
        gamma = gamma_next;
      }

      // Final leg, with complex detours as fallback for path singularities.
      try {
        cert = continue_path(cert, ContinuationPath{cert.z, z_sorted, std::nullopt}, settings);
      } catch (const SolverError&) {
        double scale = target_scale;
        for (Complex zk : cert.z) scale = std::max(scale, std::abs(zk));
        bool landed = false;
        for (double sign : {1.0, -1.0}) {
          std::vector<Complex> mid(z.size());
          for (std::size_t a = 0; a < z.size(); ++a)
            mid[a] = 0.5 * (cert.z[a] + z_sorted[a]) +
                     Complex(0.0, sign * 0.1 * scale * (static_cast<double>(a) + 1.0) / z.size());
          try {
            cert = continue_path(cert, ContinuationPath{cert.z, z_sorted, mid}, settings);
            landed = true;
            break;
          } catch (const SolverError&) {
          }
        }
        if (!landed)
          throw SolverError(SolverFailure::StepUnderflow,
                            "target leg failed on the straight path and both detours");
      }

      CriticalPointCertificate final_cert = certify(cert.configuration, z);
      final_cert.seed_tableau = index;
      final_cert.newton_iterations = cert.newton_iterations;
      result.points.push_back(final_cert);
    } catch (const SolverError& err) {
      result.failures.push_back({index, "transport", err.what()});
    } catch (const std::exception& err) {
      result.failures.push_back({index, "seed", err.what()});
    }
  }

  // Deduplicate by canonical identity, keeping the first representative.
  std::vector<CriticalPointCertificate> unique;
  for (const auto& cert : result.points) {
    bool dup = false;
    for (const auto& kept : unique)
      if (same_point(cert.configuration, kept.configuration, settings.dedup_tol)) dup = true;
    if (!dup) unique.push_back(cert);
  }
  result.points = std::move(unique);
  return result;
}

}  // namespace bethe
