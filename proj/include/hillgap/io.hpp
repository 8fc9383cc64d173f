#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hillgap/asymptotics.hpp"
#include "hillgap/potentials.hpp"
#include "hillgap/spectral_solver.hpp"
#include "hillgap/weights.hpp"

namespace hillgap {

/// Fixed "%.17g" rendering for CSV numbers: identical doubles give identical
/// bytes, and every double round-trips.
std::string format_double(double x);

PotentialSpec load_potential_spec(const std::filesystem::path& file);
Weight load_weight_spec(const std::filesystem::path& file);

/// CSV builders. All use '\n' line ends and format_double for numbers.
std::string gaps_csv(const SpectralResult& r);
std::string gaps_oracle_csv(const SpectralResult& r, const std::vector<GapInterval>& oracle);
std::string coeffs_csv(const FourierSequence& q);
std::string weight_csv(const Weight& w);
std::string ratio_csv(const std::vector<int>& sizes, const std::vector<double>& ratios);

/// JSON builders (insertion-ordered keys, so serialized output is stable).
nlohmann::ordered_json gaps_json(const SpectralResult& r,
                                 const std::vector<GapInterval>* oracle = nullptr);
nlohmann::ordered_json asymptotics_json(const GapAsymptotics& a);
nlohmann::ordered_json membership_json(const MembershipDiagnostic& d);
nlohmann::ordered_json mo_json(const MoEquivalenceReport& r);
nlohmann::ordered_json orders_json(const Weight& w, const OrderEstimate& e,
                                   const TheoremCheck& c);

std::string json_text(const nlohmann::ordered_json& j);

/// Write bytes to file, creating parent directories. Throws ConfigError on
/// filesystem failure.
void write_text(const std::filesystem::path& file, const std::string& text);

} // namespace hillgap
