#pragma once

#include <string>
#include <vector>

#include "contact/grid.hpp"
#include "contact/model.hpp"
#include "contact/phi.hpp"

namespace contact {

// Frequency-space multipliers driving the moment evolution, precomputed over
// the lattice.  mu^± = lambda^± - 1 are the net growth rates; the dispersion
// symbols f^±(p) = lambda^± ahat^±(p) - 1 govern the fluctuation semigroups.
// The named combinations are the denominators/exponents appearing in the
// closed-form pair correlation solutions:
//   h1 = mu+ - 2 f+     h2 = mu- - 2 f-     h3 = f+ + f-     h4 = mu- - f+ - f-
//   g1 = f- - f+        g2 = mu- - 2 f+
struct SymbolTable {
    double mu_plus = 0.0;
    double mu_minus = 0.0;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double lambda_cross = 0.0;
    std::vector<double> f_plus;
    std::vector<double> f_minus;
    std::vector<double> h1, h2, h3, h4, g1, g2;
    std::vector<double> ahat_plus;    // contact kernel of the plus system
    std::vector<double> ahat_minus;   // contact kernel of the minus system
    std::vector<double> ahat_cross;  // immigration kernel
};

SymbolTable build_symbols(const ModelParams& params, const FourierGrid& grid);

// Same table evaluated on an arbitrary list of radial frequencies, for
// quadrature rules and off-lattice checks.
SymbolTable build_symbols(const ModelParams& params, const std::vector<double>& q_values);

// Scalar versions for off-lattice evaluation (radial quadrature, spot checks).
double ahat_plus_at(const ModelParams& params, double q);
double ahat_minus_at(const ModelParams& params, double q);
double ahat_cross_at(const ModelParams& params, double q);
double f_plus_at(const ModelParams& params, double q);
double f_minus_at(const ModelParams& params, double q);

// The degenerate sets {g1 = 0} and {g2 = 0} must not overlap away from p = 0;
// they coincide everywhere when lambda+ = lambda-, which this rejects.
struct SingularSetReport {
    bool disjoint = true;
    std::string message;
};
SingularSetReport check_disjoint_singular_sets(const ModelParams& params, const FourierGrid& grid,
                                               double epsilon = 1e-9);

}  // namespace contact
