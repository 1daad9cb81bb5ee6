#pragma once

#include <json.hpp>

#include "bethe/combinatorics.hpp"
#include "bethe/master_function.hpp"
#include "bethe/solver.hpp"
#include "bethe/spectra.hpp"

namespace nlohmann {
template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z) {
    j = json::array({z.real(), z.imag()});
  }
  static void from_json(const json& j, std::complex<double>& z) {
    z = {j.at(0).get<double>(), j.at(1).get<double>()};
  }
};
}  // namespace nlohmann

namespace bethe {

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const StandardTableau& t);
void from_json(const nlohmann::json& j, StandardTableau& t);

/// Rational matrices travel as "p/q" strings so exact diffs stay exact.
nlohmann::json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const BetheConfiguration& cfg);
void from_json(const nlohmann::json& j, BetheConfiguration& cfg);

void to_json(nlohmann::json& j, const CriticalPointCertificate& cert);
void to_json(nlohmann::json& j, const SeedFailure& failure);
void to_json(nlohmann::json& j, const FindAllResult& result);

void to_json(nlohmann::json& j, const WeightLine& line);
void to_json(nlohmann::json& j, const JointSpectrum& spectrum);
void to_json(nlohmann::json& j, const MatchReport& report);

std::vector<Complex> to_std(const ComplexVector& v);

}  // namespace bethe
