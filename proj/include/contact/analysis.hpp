#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "contact/evolution2.hpp"
#include "contact/kernel.hpp"
#include "contact/model.hpp"
#include "contact/simulator.hpp"

namespace contact {

// Numerical witness that b(p)/(ahat(p)-1) is lattice-integrable: sums over a
// refining grid sequence (p = 0 excluded) either stabilize or keep growing.
// Also fits the near-origin power law of 1 - ahat, which should be quadratic
// with coefficient m2/(2d).
struct IntegrabilityReport {
    std::vector<double> sums;
    std::vector<double> ratios;
    bool converged = false;
    double slope = 0.0;
    double quad_rel_err = 0.0;
    std::string note;
};

IntegrabilityReport check_kernel_integrability(const Kernel& kernel,
                                               const std::function<double(double)>& b_radial,
                                               const std::vector<FourierGrid>& grid_sequence);

// Property sweep for the first divided difference of the exponential with
// negative arguments: nonnegativity, the sup bound -1/b, the interior
// maximizer, and the coincident-argument bound sup t e^{ta} = -e^{-1}/a.
struct DividedDifferenceBoundReport {
    long long cases = 0;
    long long violations = 0;
    double min_margin = 0.0;  // smallest observed (-1/b - phi1), should stay > -1e-12
    bool argmax_ok = true;
    bool degenerate_ok = true;
    bool pass = false;
    std::string note;
};

DividedDifferenceBoundReport check_divided_difference_bound(long long num_cases,
                                                            std::mt19937_64& rng);

// Monte Carlo vs analytic moments.
struct ComparisonEntry {
    double t = 0.0;
    std::string observable;
    double analytic = 0.0;
    double mc = 0.0;
    double se = 0.0;
    double z = 0.0;
};

struct ComparisonReport {
    std::vector<ComparisonEntry> entries;
    double threshold = 4.0;
    double max_abs_z = 0.0;
    bool pass = true;
    std::string note;
};

// Compare an already-computed estimate series against the closed forms for
// the given parameters (kept separate so mismatched analytics can be used as
// a negative control).
ComparisonReport compare_series(const ModelParams& params, const FirstOrderInit& init1,
                                const SimConfig& cfg, const EstimateSeries& series,
                                double threshold = 4.0);

ComparisonReport compare_sim_analytic(const ModelParams& params, const FirstOrderInit& init1,
                                      const SimConfig& cfg, double threshold = 4.0,
                                      Backend backend = Backend::openmp);

// Generic t-independent dominating field b(p) / (h4(p) h2(p)); entries with a
// nonpositive denominator (only p = 0 in the covered cases) are +infinity.
std::vector<double> build_majorant(const SymbolTable& sym, const std::vector<double>& b_field);

// Per-channel majorants of the birth-source integrals, their pointwise
// domination over sampled times, and a lattice-integrability refinement.
struct MajorantReport {
    std::vector<double> m_mm, m_pm, m_pp;
    bool dominated = true;
    double max_ratio = 0.0;
    bool case2_inequality_ok = true;
    double integral_coarse = 0.0;
    double integral_fine = 0.0;
    double refinement_rel_change = 0.0;
    bool integrable = false;
    std::string note;
};

MajorantReport check_majorant(const ModelParams& params, const FirstOrderInit& init1,
                              const SecondOrderInit& init2, const FourierGrid& grid,
                              const std::vector<double>& times = {0.1, 1.0, 10.0, 100.0});

}  // namespace contact
