#include "bethe/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bethe {

namespace {

double frobenius(const ComplexMatrix& m) { return m.norm(); }

std::vector<Complex> random_unit_combination(std::mt19937_64& rng, int count) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> a(count);
  double norm2 = 0.0;
  for (auto& c : a) {
    c = Complex(gauss(rng), gauss(rng));
    norm2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : a) c *= inv;
  return a;
}

/// Single-linkage clusters of eigenvalues within the given radius.
std::vector<std::vector<int>> cluster_eigenvalues(const ComplexVector& values, double radius) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
  std::vector<std::vector<int>> clusters(n);
  for (int i = 0; i < n; ++i) clusters[find(i)].push_back(i);
  clusters.erase(std::remove_if(clusters.begin(), clusters.end(),
                                [](const auto& c) { return c.empty(); }),
                 clusters.end());
  return clusters;
}

/// Orthonormal basis of the m smallest right singular directions.
ComplexMatrix smallest_singular_subspace(const ComplexMatrix& m, int count) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(count);
}

int numerical_kernel_dim(const ComplexMatrix& m, double threshold) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  int dim = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) <= threshold) ++dim;
  return dim;
}

}  // namespace

int JointSpectrum::total_multiplicity() const {
  int sum = 0;
  for (const auto& w : weights) sum += w.multiplicity;
  return sum;
}

JointSpectrum joint_spectrum(const std::vector<ComplexMatrix>& ops, double tol,
                             std::uint64_t rng_seed) {
  if (ops.empty()) throw std::invalid_argument("joint_spectrum: empty family");
  const Eigen::Index dim = ops[0].rows();
  for (const auto& op : ops)
    if (op.rows() != dim || op.cols() != dim)
      throw std::invalid_argument("joint_spectrum: inconsistent operator shapes");

  double scale = 0.0;
  for (const auto& op : ops) scale = std::max(scale, frobenius(op));
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const double comm = frobenius(ops[i] * ops[j] - ops[j] * ops[i]);
      if (comm > tol * std::max(1.0, scale * scale))
        throw std::invalid_argument("joint_spectrum: operators " + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + " do not commute (|[A,B]| = " +
                                    std::to_string(comm) + ")");
    }

  std::mt19937_64 rng(rng_seed);
  const int max_attempts = 5;
  std::string last_issue;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const std::vector<Complex> combo = random_unit_combination(rng, static_cast<int>(ops.size()));
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < ops.size(); ++i) m += combo[i] * ops[i];

    Eigen::ComplexEigenSolver<ComplexMatrix> eig(m, /*computeEigenvectors=*/false);
    const double radius = tol * std::max(1.0, frobenius(m));
    const auto clusters = cluster_eigenvalues(eig.eigenvalues(), radius);

    JointSpectrum spectrum;
    spectrum.ambient_dim = static_cast<int>(dim);
    spectrum.attempts = attempt;
    spectrum.rng_seed = rng_seed;
    spectrum.combination = combo;

    bool collision = false;
    for (const auto& cluster : clusters) {
      const int mult = static_cast<int>(cluster.size());
      Complex mean = 0.0;
      for (int idx : cluster) mean += eig.eigenvalues()(idx);
      mean /= static_cast<double>(mult);

      const ComplexMatrix shifted = m - mean * ComplexMatrix::Identity(dim, dim);
      ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
      for (int p = 0; p < mult; ++p) power = power * shifted;
      const ComplexMatrix basis = smallest_singular_subspace(power, mult);

      WeightLine line;
      line.multiplicity = mult;
      line.basis = basis;
      line.mu = ComplexVector(ops.size());
      double scalar_defect = 0.0;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        const ComplexMatrix restricted = basis.adjoint() * ops[i] * basis;
        line.mu[i] = restricted.trace() / static_cast<double>(mult);
        if (mult > 1) {
          Eigen::ComplexEigenSolver<ComplexMatrix> sub(restricted, false);
          double spread = 0.0;
          for (Eigen::Index a = 0; a < sub.eigenvalues().size(); ++a)
            spread = std::max(spread, std::abs(sub.eigenvalues()(a) - line.mu[i]));
          scalar_defect = std::max(scalar_defect, spread);
        }
      }
      // The family separating a merged cluster marks a collision of the
      // random combination, not a true multiplicity.
      if (mult > 1 && scalar_defect > 1e3 * tol * std::max(1.0, scale)) {
        collision = true;
        last_issue = "combination collision on a multiplicity-" + std::to_string(mult) + " cluster";
        break;
      }

      line.eigen_dim = numerical_kernel_dim(shifted, 1e2 * radius);
      line.eigen_dim = std::min(line.eigen_dim, mult);
      spectrum.weights.push_back(std::move(line));
    }

    if (!collision) {
      std::sort(spectrum.weights.begin(), spectrum.weights.end(),
                [](const WeightLine& a, const WeightLine& b) {
                  for (Eigen::Index i = 0; i < a.mu.size(); ++i) {
                    if (a.mu[i].real() != b.mu[i].real()) return a.mu[i].real() < b.mu[i].real();
                    if (a.mu[i].imag() != b.mu[i].imag()) return a.mu[i].imag() < b.mu[i].imag();
                  }
                  return false;
                });
      return spectrum;
    }
  }
  throw std::runtime_error("joint_spectrum: persistent " + last_issue + " after " +
                           std::to_string(max_attempts) + " attempts");
}

SemisimplicityVerdict is_semisimple(const std::vector<ComplexMatrix>& ops, double tol,
                                    std::uint64_t rng_seed) {
  SemisimplicityVerdict verdict;
  verdict.spectrum = joint_spectrum(ops, tol, rng_seed);
  verdict.semisimple = true;
  int eigen_total = 0;
  for (const auto& w : verdict.spectrum.weights) {
    eigen_total += w.eigen_dim;
    if (w.eigen_dim < w.multiplicity && !verdict.witness) verdict.witness = w.mu;
  }
  if (eigen_total != verdict.spectrum.ambient_dim) verdict.semisimple = false;
  return verdict;
}

MatchReport match_bethe(const std::vector<ComplexVector>& predicted, const JointSpectrum& spectrum,
                        double tol) {
  // Expand weights by multiplicity into individual slots.
  std::vector<ComplexVector> slots;
  for (const auto& w : spectrum.weights)
    for (int copy = 0; copy < w.multiplicity; ++copy) slots.push_back(w.mu);

  const int np = static_cast<int>(predicted.size());
  const int ns = static_cast<int>(slots.size());
  auto distance = [&](int p, int s) {
    double d = 0.0;
    for (Eigen::Index i = 0; i < predicted[p].size(); ++i)
      d = std::max(d, std::abs(predicted[p][i] - slots[s][i]));
    return d;
  };

  for (const auto& tuple : predicted)
    if (!slots.empty() && tuple.size() != slots[0].size())
      throw std::invalid_argument("match_bethe: tuple length mismatch");

  // Kuhn's augmenting-path matching on the ≤ tol feasibility graph; the
  // greedy first pass is the usual warm start.
  std::vector<int> slot_of(np, -1), pred_of(ns, -1);
  for (int p = 0; p < np; ++p) {
    int best = -1;
    double best_d = tol;
    for (int s = 0; s < ns; ++s)
      if (pred_of[s] < 0 && distance(p, s) <= best_d) {
        best_d = distance(p, s);
        best = s;
      }
    if (best >= 0) {
      slot_of[p] = best;
      pred_of[best] = p;
    }
  }
  auto augment = [&](auto&& self, int p, std::vector<bool>& visited) -> bool {
    for (int s = 0; s < ns; ++s) {
      if (visited[s] || distance(p, s) > tol) continue;
      visited[s] = true;
      if (pred_of[s] < 0 || self(self, pred_of[s], visited)) {
        pred_of[s] = p;
        slot_of[p] = s;
        return true;
      }
    }
    return false;
  };
  for (int p = 0; p < np; ++p) {
    if (slot_of[p] >= 0) continue;
    std::vector<bool> visited(ns, false);
    augment(augment, p, visited);
  }

  MatchReport report;
  for (int p = 0; p < np; ++p) {
    if (slot_of[p] < 0) {
      report.unmatched_predicted.push_back(p);
      continue;
    }
    report.pairs.emplace_back(p, slot_of[p]);
    report.residuals.push_back(distance(p, slot_of[p]));
    report.max_residual = std::max(report.max_residual, report.residuals.back());
  }
  for (int s = 0; s < ns; ++s)
    if (pred_of[s] < 0) report.unmatched_spectrum.push_back(s);
  report.success = report.unmatched_predicted.empty() && report.unmatched_spectrum.empty() &&
                   np == ns && report.max_residual <= tol;
  return report;
}

}  // namespace bethe
