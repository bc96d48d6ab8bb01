#pragma once

// Report generation: the residual-figure data pipeline (lambda grid, residual
// chain down to o_4), dyadic-window asymptotics reports for the error-term
// corollaries, and the acceptance-criteria runner shared by the test gate and
// the `suite` CLI subcommand.

#include <cstdint>
#include <string>
#include <vector>

#include "gsphere/radial_counts.hpp"

namespace gsphere {

struct FigureRow {
    std::int64_t lambda = 0;
    double sigma2 = 0.0;  // lambda / 8
    double n34 = 0.0;
    double residual1 = 0.0;  // n34 - (pi/630) S^7
    double residual2 = 0.0;  // residual1 - (C_0/6) S^3
    double residual3 = 0.0;  // residual2 - C_2 S  (= o_4(S))
};

// Grid S^2 = lambda/8, lambda = 1..lambda_max; exact N_{3,4} per row, C_0 and
// C_2 from the Ewald route at 1e-9. Every 50th row the residual chain is
// cross-checked against the truncated o_4 series; a violation of the combined
// rigorous bound throws with the offending row.
std::vector<FigureRow> figure_pipeline(const RadialCountTable& table,
                                       std::int64_t lambda_max,
                                       std::int64_t n_terms,
                                       unsigned threads = 1);

struct AsymptoticsWindow {
    double sigma_lo = 0.0;
    double sigma_hi = 0.0;
    double max_weighted = 0.0;   // max |residual| / weight(S)
    double max_sharpness = 0.0;  // max |residual| / S^0.9
};

struct AsymptoticsReport {
    int k = 0;
    std::string grid;
    double global_max_weighted = 0.0;
    double global_max_sharpness = 0.0;
    std::vector<AsymptoticsWindow> windows;
    std::string verdict;
};

// Residual of the main formula against exact values on S^2 = m + 1/2 grids,
// split into dyadic windows ending at sigma_max. Weight S log(2+S) for k = 1,
// S for k >= 2; the S^0.9 column is the (purely empirical) sharpness probe.
AsymptoticsReport asymptotics_report(const RadialCountTable& table, int k,
                                     double sigma_max, unsigned threads = 1);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double margin = 0.0;  // smallest slack observed, in units of the tolerance
    std::string detail;
};

// The ten acceptance criteria. profile: "quick" (max_n 4e4, N 1e4) or "full"
// (max_n 1e6, N 1e5).
std::vector<CriterionResult> run_acceptance(const std::string& profile,
                                            unsigned threads = 1);

// Exit status (0 iff all criteria pass) plus a JSON summary.
int run_suite(const std::string& profile, std::string& json_out,
              unsigned threads = 1);

}  // namespace gsphere
