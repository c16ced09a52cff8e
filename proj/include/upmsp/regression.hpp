#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "upmsp/telemetry.hpp"

namespace upmsp {

// The 16-term log-utility model, one per neighbourhood:
//   log10(E[u]) = b0 + bM*M + bJ*J + bS*S + bt*t' + bsx*sx'
//              + btt*t'^2 + bMM*M^2 + bJJ*J^2 + bSS*S^2 + bsxsx*sx'^2
//              + bJt*J*t' + bJM*J*M + bJS*J*S + bMS*M*S + bMsx*M*sx'
// with t' = log10(t) and sx' = log10(s_x). Term order is frozen.
inline constexpr int kNumTerms = 16;
inline constexpr std::array<const char*, kNumTerms> kTermNames = {
    "b0", "M",  "J",  "S",    "t",  "sx", "tt", "MM",
    "JJ", "SS", "sxsx", "Jt", "JM", "JS", "MS", "Msx"};

// t is clamped to [kTMin, 1] before taking logs; the first incumbent change
// can land at t ~ 0.
inline constexpr double kTMin = 1e-3;

std::array<double, kNumTerms> design_row(double M, double J, double S,
                                         double t, double sx);

struct UtilityModel {
    Neighbourhood id = Neighbourhood::Shift;
    std::array<double, kNumTerms> beta{};
    long long rows = 0;
    double rss = 0.0;
    double r2 = 0.0;
    std::vector<std::string> dropped_terms;  // zeroed by DropDependent
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DesignMatrix {
    std::vector<std::array<double, kNumTerms>> rows;
    std::vector<double> response;       // log10(E[u_i])
    long long dropped_zero_utility = 0; // events with E[u_i] = 0
};

// One row per event with positive expected utility for `id`.
DesignMatrix build_design(const std::vector<EnumerationEvent>& events,
                          Neighbourhood id);

// Strict: rank deficiency among the varying columns raises FitError naming
// them. DropDependent: dependent columns get a zero coefficient and are
// reported in UtilityModel::dropped_terms; needed when the training grid has
// only two levels per factor, which makes M^2, J^2, S^2 exact linear
// functions of M, J, S.
enum class RankPolicy { Strict, DropDependent };

// Ordinary least squares with column standardisation and a column-pivoted
// QR solve; coefficients are reported in raw units. Constant columns get a
// zero coefficient (the intercept absorbs them). Throws FitError on too few
// rows, or on rank deficiency under RankPolicy::Strict.
UtilityModel fit_ols(const DesignMatrix& design, Neighbourhood id,
                     RankPolicy rank_policy = RankPolicy::Strict);

// beta . design_row(M, J, S, t, sx); caller exponentiates (10^x) for E[u].
double predict_log_utility(const UtilityModel& model, double M, double J,
                           double S, double t, double sx);

void save_models(const std::array<UtilityModel, kNumNeighbourhoods>& models,
                 const std::filesystem::path& path);
std::array<UtilityModel, kNumNeighbourhoods> load_models(
    const std::filesystem::path& path);

}  // namespace upmsp
