#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact/grid.hpp"
#include "contact/kernel.hpp"

namespace contact {

// Two-type branching system: minus particles branch on their own at rate
// lambda_minus via kernel_minus, plus particles at rate lambda_plus via
// kernel_plus, and every minus particle additionally spawns plus offspring at
// rate lambda_cross via kernel_cross.  Every particle dies at rate one.
// There is no feedback from the plus population to the minus one.
struct ModelParams {
    double lambda_plus = 1.0;
    double lambda_minus = 1.0;
    double lambda_cross = 0.0;
    Kernel kernel_plus;
    Kernel kernel_minus;
    Kernel kernel_cross;
    int dim = 3;

    double mu_plus() const { return lambda_plus - 1.0; }
    double mu_minus() const { return lambda_minus - 1.0; }
};

// First-moment initial data: spatial constants plus integrable fluctuations
// sampled on the grid (empty vector means identically zero fluctuation).
// alpha_minus is the promised uniform lower bound on the minus density.
struct FirstOrderInit {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double alpha_minus = 0.0;
    std::vector<double> psi_plus;
    std::vector<double> psi_minus;
};

// Second-moment initial data for the three pair channels; fluctuations must
// be even fields.  translation_invariant records that the run treats first
// moments as spatially constant (psi identically zero).
struct SecondOrderInit {
    double c_pp = 0.0;
    double c_pm = 0.0;
    double c_mm = 0.0;
    std::vector<double> phi_pp;
    std::vector<double> phi_pm;
    std::vector<double> phi_mm;
    bool translation_invariant = true;
};

// Hypothesis checks; every violation is reported as data, nothing throws.
std::vector<std::string> validate_kernel(const Kernel& kernel, const std::string& label,
                                         double decay_exponent = 0.0);
std::vector<std::string> validate_params(const ModelParams& params);
std::vector<std::string> validate_first_order(const FirstOrderInit& init, const FourierGrid& grid);
std::vector<std::string> validate_second_order(const SecondOrderInit& init, const FourierGrid& grid,
                                               const FirstOrderInit* init1 = nullptr);

// Reported witness for the polynomial decay bound a(x) <= A / (1+|x|)^delta.
struct DecayWitness {
    double delta = 0.0;
    double constant = 0.0;
};
DecayWitness kernel_decay_witness(const Kernel& kernel, double delta);

// numeric check of the normalization integral <a> via radial quadrature
double kernel_mass(const Kernel& kernel);

ModelParams make_params(double lambda_plus, double lambda_minus, double lambda_cross,
                        const Kernel& kp, const Kernel& km, const Kernel& kx);

}  // namespace contact
