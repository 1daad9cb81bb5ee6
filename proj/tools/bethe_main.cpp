// Command-line front end: enumerate tableaux, find critical points, verify
// the Bethe/direct spectrum match, and run asymptotic diagnostics.
//
// Exit codes: 0 success, 2 verification mismatch, 3 solver shortfall,
// 4 configuration error.

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "bethe/asymptotic.hpp"
#include "bethe/json_io.hpp"
#include "bethe/solver.hpp"
#include "bethe/specht.hpp"
#include "bethe/spectra.hpp"
#include "bethe/tensor_oracle.hpp"

namespace {

using namespace bethe;
using nlohmann::json;

constexpr const char* kToolVersion = "bethe 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitShortfall = 3;
constexpr int kExitConfig = 4;

struct RunConfig {
  std::string shape_text;
  std::vector<double> z;
  double gamma = 1e4;
  double tol = 1e-12;
  double match_tol = 1e-8;
  std::uint64_t seed = 20240711ULL;
  bool oracle = false;
  int n_override = 0;
  std::string out;
  std::string csv;
  std::vector<double> gammas = {1e2, 1e3, 1e4};
};

json config_json(const RunConfig& config) {
  return json{{"shape", config.shape_text}, {"z", config.z},
              {"gamma", config.gamma},      {"tol", config.tol},
              {"match_tol", config.match_tol}, {"seed", config.seed},
              {"oracle", config.oracle},    {"n", config.n_override},
              {"gammas", config.gammas}};
}

void emit(const json& report, const std::string& out) {
  if (out.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("BETHE_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  std::ofstream stream(path);
  if (!stream) throw std::runtime_error("cannot write " + path.string());
  stream << report.dump(2) << "\n";
}

std::vector<Complex> complex_nodes(const std::vector<double>& z) {
  std::vector<Complex> out;
  out.reserve(z.size());
  for (double v : z) out.emplace_back(v, 0.0);
  return out;
}

void require_distinct(const std::vector<double>& z) {
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      if (z[a] == z[b])
        throw std::invalid_argument("coincident z_" + std::to_string(a + 1) + " = z_" +
                                    std::to_string(b + 1));
}

SolverSettings settings_from(const RunConfig& config) {
  SolverSettings settings;
  settings.newton_tol = config.tol;
  settings.gamma = config.gamma;
  return settings;
}

std::vector<ComplexMatrix> theta_family(const SpechtRep& rep, const std::vector<Complex>& z) {
  std::vector<ComplexMatrix> ops;
  for (int i = 1; i <= rep.points(); ++i) ops.push_back(theta_matrix<Complex>(rep, i, z));
  return ops;
}

std::vector<double> sorted_spectrum_parts(const ComplexMatrix& m, bool real_part) {
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(m);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    out.push_back(real_part ? eig.eigenvalues()(i).real() : eig.eigenvalues()(i).imag());
  std::sort(out.begin(), out.end());
  return out;
}

/// Max deviation between the sorted spectra of two operators.
double spectrum_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::ComplexEigenSolver<ComplexMatrix> ea(a), eb(b);
  std::vector<Complex> va, vb;
  for (Eigen::Index i = 0; i < ea.eigenvalues().size(); ++i) va.push_back(ea.eigenvalues()(i));
  for (Eigen::Index i = 0; i < eb.eigenvalues().size(); ++i) vb.push_back(eb.eigenvalues()(i));
  auto key = [](Complex lhs, Complex rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
  };
  std::sort(va.begin(), va.end(), key);
  std::sort(vb.begin(), vb.end(), key);
  double gap = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) gap = std::max(gap, std::abs(va[i] - vb[i]));
  return gap;
}

int cmd_tableaux(const RunConfig& config) {
  const Partition shape = Partition::parse(config.shape_text);
  const auto tableaux = enumerate_standard_tableaux(shape);
  const WeightData wd = weight_data(shape);

  json rows = json::array();
  for (const auto& t : tableaux)
    rows.push_back(json{{"rows", t}, {"contents", content_vector(t)}});
  const json report{{"tool", kToolVersion},
                    {"config", config_json(config)},
                    {"shape", shape},
                    {"dimension", hook_length_dimension(shape).get_str()},
                    {"levels", wd.L},
                    {"multiplicities", wd.m},
                    {"tableaux", rows}};
  emit(report, config.out);
  return kExitOk;
}

int cmd_solve(const RunConfig& config) {
  const Partition shape = Partition::parse(config.shape_text);
  if (static_cast<int>(config.z.size()) != shape.n())
    throw std::invalid_argument("need exactly N z values for shape " + shape.to_string());
  require_distinct(config.z);

  const FindAllResult result =
      find_all_critical_points(shape, complex_nodes(config.z), settings_from(config));
  json report{{"tool", kToolVersion}, {"config", config_json(config)}, {"result", result}};
  report["provenance"] = "certificates from Newton-polished continuation seeds; "
                         "expected count from the exact hook-length dimension";
  emit(report, config.out);
  return result.complete() ? kExitOk : kExitShortfall;
}

int cmd_verify(const RunConfig& config) {
  const Partition shape = Partition::parse(config.shape_text);
  if (static_cast<int>(config.z.size()) != shape.n())
    throw std::invalid_argument("need exactly N z values for shape " + shape.to_string());
  require_distinct(config.z);
  const std::vector<Complex> z = complex_nodes(config.z);

  const FindAllResult solved = find_all_critical_points(shape, z, settings_from(config));

  const SpechtRep rep = build_rep(shape);
  const auto family = theta_family(rep, z);
  const SemisimplicityVerdict verdict = is_semisimple(family, 1e-10, config.seed);

  std::vector<ComplexVector> predicted;
  for (const auto& cert : solved.points) predicted.push_back(cert.eigenvalues);
  const MatchReport match = match_bethe(predicted, verdict.spectrum, config.match_tol);

  json report{{"tool", kToolVersion},
              {"config", config_json(config)},
              {"solver", solved},
              {"spectrum", verdict.spectrum},
              {"semisimple", verdict.semisimple},
              {"match", match}};

  bool oracle_ok = true;
  if (config.oracle) {
    const int n = config.n_override > 0 ? config.n_override : shape.rows() + 1;
    const HighestWeightSpace hws = highest_weight_space(n, shape);
    json oracle = json::array();
    for (int i = 1; i <= shape.n(); ++i) {
      const double gap =
          spectrum_gap(theta_on_tensor<Complex>(hws, i, z), theta_matrix<Complex>(rep, i, z));
      oracle.push_back(json{{"operator", i}, {"spectrum_gap", gap}});
      if (gap > 1e-9) oracle_ok = false;
    }
    report["oracle"] = json{{"n", n}, {"per_operator", oracle}, {"pass", oracle_ok}};
  }

  int exit_code = kExitOk;
  if (!solved.complete())
    exit_code = kExitShortfall;
  else if (!match.success || !oracle_ok)
    exit_code = kExitMismatch;
  report["exit_code"] = exit_code;
  emit(report, config.out);
  return exit_code;
}

json asymptotic_rows(const Partition& shape, double gamma, const SolverSettings& settings,
                     double* worst_error) {
  const auto tableaux = enumerate_standard_tableaux(shape);
  std::vector<Complex> z(shape.n());
  double power = 1.0;
  for (int j = 0; j < shape.n(); ++j) {
    power *= gamma;
    z[j] = Complex(power, 0.0);
  }

  json rows = json::array();
  for (std::size_t k = 0; k < tableaux.size(); ++k) {
    json row{{"tableau", tableaux[k]}, {"contents", content_vector(tableaux[k])}};
    const AsymptoticSeed seed = asymptotic_seed(tableaux[k], z, settings.zone_ratio);
    json ratios = json::array();
    for (const auto& coord : seed.coordinates)
      ratios.push_back(json{{"level", coord.level},
                            {"creating_entry", coord.creating_entry},
                            {"beta", to_fraction_string(coord.beta)}});
    row["ratios"] = ratios;
    try {
      const CriticalPointCertificate cert = newton_solve(seed.configuration(), z, settings);
      double err = 0.0;
      const std::vector<int> contents = content_vector(tableaux[k]);
      for (int j = 0; j < shape.n(); ++j)
        err = std::max(err, std::abs(cert.eigenvalues[j] * z[j] - Complex(contents[j], 0.0)));
      json betas = json::array();
      double beta_err = 0.0;
      {
        // polished coordinates keep the creation order, so ratios align
        const BetheConfiguration seeded = seed.configuration();
        std::vector<std::size_t> cursor(seeded.levels.size(), 0);
        for (const auto& coord : seed.coordinates) {
          const Complex polished =
              cert.configuration.levels[coord.level - 1][cursor[coord.level - 1]++];
          const Complex ratio = polished / z[coord.creating_entry - 1];
          beta_err = std::max(beta_err, std::abs(ratio - Complex(to_double(coord.beta), 0.0)));
          betas.push_back(json{{"level", coord.level},
                               {"creating_entry", coord.creating_entry},
                               {"polished_ratio", ratio}});
        }
      }
      row["converged"] = true;
      row["certificate"] = cert;
      row["max_scaled_eigenvalue_error"] = err;
      row["max_beta_error"] = beta_err;
      row["polished_ratios"] = betas;
      if (worst_error) *worst_error = std::max(*worst_error, err);
    } catch (const std::exception& e) {
      row["converged"] = false;
      row["error"] = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_asymptotic(const RunConfig& config) {
  const Partition shape = Partition::parse(config.shape_text);
  if (config.gamma <= 1.0) throw std::invalid_argument("gamma must exceed 1");
  SolverSettings settings = settings_from(config);
  double worst = 0.0;
  const json rows = asymptotic_rows(shape, config.gamma, settings, &worst);
  const json report{{"tool", kToolVersion},
                    {"config", config_json(config)},
                    {"shape", shape},
                    {"gamma", config.gamma},
                    {"worst_scaled_eigenvalue_error", worst},
                    {"tableaux", rows}};
  emit(report, config.out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& config) {
  const Partition shape = Partition::parse(config.shape_text);
  for (double g : config.gammas)
    if (g <= 1.0) throw std::invalid_argument("gamma values must exceed 1");
  SolverSettings settings = settings_from(config);

  const auto tableaux = enumerate_standard_tableaux(shape);
  // errors[t][g]
  std::vector<std::vector<double>> errors(tableaux.size(),
                                          std::vector<double>(config.gammas.size(), -1.0));
  json per_gamma = json::array();
  for (std::size_t g = 0; g < config.gammas.size(); ++g) {
    double worst = 0.0;
    const json rows = asymptotic_rows(shape, config.gammas[g], settings, &worst);
    for (std::size_t t = 0; t < tableaux.size(); ++t)
      if (rows[t]["converged"].get<bool>())
        errors[t][g] = rows[t]["max_scaled_eigenvalue_error"].get<double>();
    per_gamma.push_back(json{{"gamma", config.gammas[g]}, {"rows", rows}});
  }

  json slopes = json::array();
  for (std::size_t t = 0; t < tableaux.size(); ++t) {
    // least-squares slope of log(err) against log(gamma), when meaningful
    std::vector<std::pair<double, double>> pts;
    for (std::size_t g = 0; g < config.gammas.size(); ++g)
      if (errors[t][g] > 1e-14) pts.emplace_back(std::log(config.gammas[g]), std::log(errors[t][g]));
    json entry{{"tableau_index", t}};
    if (pts.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double n = static_cast<double>(pts.size());
      entry["slope"] = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    } else {
      entry["slope"] = nullptr;
      entry["note"] = "errors at rounding level; decay not measurable";
    }
    slopes.push_back(std::move(entry));
  }

  const json report{{"tool", kToolVersion},
                    {"config", config_json(config)},
                    {"shape", shape},
                    {"sweep", per_gamma},
                    {"slopes", slopes}};
  emit(report, config.out);

  if (!config.csv.empty()) {
    std::filesystem::path path(config.csv);
    if (path.is_relative()) {
      if (const char* dir = std::getenv("BETHE_OUTPUT_DIR"))
        path = std::filesystem::path(dir) / path;
    }
    std::ofstream csv(path);
    if (!csv) throw std::runtime_error("cannot write " + path.string());
    csv << "shape,tableau_index,gamma,max_scaled_eigenvalue_error\n";
    for (std::size_t t = 0; t < tableaux.size(); ++t)
      for (std::size_t g = 0; g < config.gammas.size(); ++g)
        csv << shape.to_string() << "," << t << "," << config.gammas[g] << ","
            << (errors[t][g] < 0 ? std::string("diverged") : std::to_string(errors[t][g])) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolVersion) +
               " — Bethe ansatz for symmetric-group Gaudin operators on Specht modules"};
  app.require_subcommand(1);

  RunConfig config;

  auto add_common = [&](CLI::App* cmd, bool with_z) {
    cmd->add_option("--shape", config.shape_text, "partition, e.g. 3,2,1")->required();
    if (with_z) cmd->add_option("--z", config.z, "evaluation nodes z_1,...,z_N")->delimiter(',');
    cmd->add_option("--gamma", config.gamma, "seed realization scale");
    cmd->add_option("--tol", config.tol, "Newton residual tolerance");
    cmd->add_option("--seed", config.seed, "RNG seed recorded in reports");
    cmd->add_option("--out", config.out, "output path (JSON); stdout when omitted");
  };

  CLI::App* tableaux = app.add_subcommand("tableaux", "list standard tableaux and contents");
  add_common(tableaux, false);

  CLI::App* solve = app.add_subcommand("solve", "find all critical points at a given z");
  add_common(solve, true);

  CLI::App* verify =
      app.add_subcommand("verify", "match Bethe eigenvalue tuples against the direct spectrum");
  add_common(verify, true);
  verify->add_option("--match-tol", config.match_tol, "matching tolerance");
  verify->add_flag("--oracle", config.oracle, "cross-check against the tensor-space realization");
  verify->add_option("--n", config.n_override, "tensor oracle dim(V) override");

  CLI::App* asym = app.add_subcommand("asymptotic", "per-tableau seeds and polished ratios");
  add_common(asym, false);

  CLI::App* sweep = app.add_subcommand("sweep", "scaled-eigenvalue error decay across gamma");
  add_common(sweep, false);
  sweep->add_option("--gammas", config.gammas, "gamma values")->delimiter(',');
  sweep->add_option("--csv", config.csv, "CSV output path for the sweep table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (tableaux->parsed()) return cmd_tableaux(config);
    if (solve->parsed()) return cmd_solve(config);
    if (verify->parsed()) return cmd_verify(config);
    if (asym->parsed()) return cmd_asymptotic(config);
    if (sweep->parsed()) return cmd_sweep(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfig;
}
