#pragma once

#include "cvpt/bender_wu.hpp"
#include "cvpt/convergence.hpp"
#include "cvpt/effective_potential.hpp"
#include "cvpt/vpt.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cvpt {

using json = nlohmann::ordered_json;

inline constexpr const char* kLoopTemplate = "r_l * g^(2(l-1)) * wtilde^(1-5(l-1))";

// Exact values travel as decimal strings so their size is unbounded.
json to_json(const BigRational& q);
BigRational rational_from_json(const json& j);
json to_json(const GaussRational& z);
GaussRational gauss_from_json(const json& j);

/// [{k, numerator, denominator}]; the coefficients are real.
json energy_to_json(const EnergyCoefficients& eps);
EnergyCoefficients energy_from_json(const json& j);

/// [{k, j, re_num, re_den, im_num, im_den}] over nonzero coefficients.
json potential_to_json(const EffectivePotentialSeries& v);
EffectivePotentialSeries potential_from_json(const json& j);

json loops_to_json(const LoopExpansion& loops);
LoopExpansion loops_from_json(const json& j);

json to_json(const GroundStateSeries& s);
GroundStateSeries ground_state_from_json(const json& j);
json to_json(const VeffSeries& s);
VeffSeries veff_from_json(const json& j);

json to_json(const VptSolution& s);
json to_json(const ConvergenceFit& fit);

/// Writes to a temporary file in the same directory, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Series through the given order, read from the cache directory when it holds at least
/// that order and recomputed (and stored) otherwise. No directory means no caching.
GroundStateSeries cached_ground_state_series(int order, const std::optional<std::filesystem::path>& cache_dir);
VeffSeries cached_veff_series(int order, const std::optional<std::filesystem::path>& cache_dir);

/// Classic-locale rendering with the given number of significant digits.
std::string format_double(double x, int digits = 17);

/// One CSV row of a VPT scan.
struct ScanRow {
    int order = 0;
    std::optional<double> b0;
    std::optional<double> deviation;
};

/// Reads rows with at least the columns N and b0 or deviation; malformed input throws
/// parse_error with the offending line number. Rows without a value are skipped.
std::vector<ScanRow> read_scan_csv(std::istream& in);

} // namespace cvpt
