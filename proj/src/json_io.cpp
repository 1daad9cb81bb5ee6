#include "bethe/json_io.hpp"

namespace bethe {

using nlohmann::json;

std::vector<Complex> to_std(const ComplexVector& v) {
  return {v.data(), v.data() + v.size()};
}

void to_json(json& j, const Partition& p) { j = p.parts; }

void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const StandardTableau& t) { j = t.rows; }

void from_json(const json& j, StandardTableau& t) {
  t.rows = j.get<std::vector<std::vector<int>>>();
  std::vector<int> parts;
  for (const auto& row : t.rows) parts.push_back(static_cast<int>(row.size()));
  t.shape = Partition(parts);
  if (!t.is_standard()) throw std::invalid_argument("tableau JSON is not standard");
}

json rational_matrix_to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix rational_matrix_from_json(const json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  RationalMatrix m(rows, cols);
  const json& entries = j.at("entries");
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = rational_from_string(entries.at(r).at(c).get<std::string>());
  return m;
}

void to_json(json& j, const BetheConfiguration& cfg) { j = json{{"levels", cfg.levels}}; }

void from_json(const json& j, BetheConfiguration& cfg) {
  cfg.levels = j.at("levels").get<std::vector<std::vector<Complex>>>();
}

void to_json(json& j, const CriticalPointCertificate& cert) {
  j = json{{"configuration", cert.configuration},
           {"z", cert.z},
           {"residual_norm", cert.residual_norm},
           {"hessian_min_singular_value", cert.hessian_sv.min_sv},
           {"hessian_max_singular_value", cert.hessian_sv.max_sv},
           {"eigenvalues", to_std(cert.eigenvalues)},
           {"newton_iterations", cert.newton_iterations},
           {"seed_tableau", cert.seed_tableau}};
}

void to_json(json& j, const SeedFailure& failure) {
  j = json{{"tableau", failure.tableau_index}, {"stage", failure.stage},
           {"message", failure.message}};
}

void to_json(json& j, const FindAllResult& result) {
  j = json{{"shape", result.shape},
           {"z", result.z},
           {"expected", result.expected_count.get_str()},
           {"found", result.points.size()},
           {"points", result.points},
           {"failures", result.failures}};
}

void to_json(json& j, const WeightLine& line) {
  j = json{{"mu", to_std(line.mu)},
           {"multiplicity", line.multiplicity},
           {"eigenspace_dimension", line.eigen_dim}};
}

void to_json(json& j, const JointSpectrum& spectrum) {
  j = json{{"weights", spectrum.weights},
           {"ambient_dimension", spectrum.ambient_dim},
           {"attempts", spectrum.attempts},
           {"rng_seed", spectrum.rng_seed},
           {"combination", spectrum.combination}};
}

void to_json(json& j, const MatchReport& report) {
  j = json{{"pairs", report.pairs},
           {"residuals", report.residuals},
           {"unmatched_predicted", report.unmatched_predicted},
           {"unmatched_spectrum", report.unmatched_spectrum},
           {"max_residual", report.max_residual},
           {"success", report.success}};
}

}  // namespace bethe
