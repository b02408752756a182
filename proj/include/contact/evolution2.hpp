#pragma once

#include <string>
#include <vector>

#include "contact/backend.hpp"
#include "contact/evolution1.hpp"
#include "contact/model.hpp"
#include "contact/split_field.hpp"
#include "contact/symbols.hpp"

namespace contact {

struct SecondOrderState {
    SplitField k_mm;
    SplitField k_pm;
    SplitField k_pp;
    double t = 0.0;
    bool via_oracle = false;  // produced by the ODE fallback instead of closed forms
};

struct SecondOrderProblem {
    ModelParams params;
    FourierGrid grid;
    SymbolTable sym;
    FirstOrderInit init1;
    SecondOrderInit init2;
    cvector phi_mm_hat, phi_pm_hat, phi_pp_hat;

    static SecondOrderProblem prepare(const ModelParams& params, const FirstOrderInit& init1,
                                      const SecondOrderInit& init2, const FourierGrid& grid);
};

// Inhomogeneous parts of the pair fluctuation spectra at lattice index i: the
// accumulated birth-source integrals, zero at t = 0 and continuous across all
// exponent coincidences.  phi_mm / phi_pm are the initial pair fluctuation
// values at i feeding the transported source terms.
double u_hat_mm(const SymbolTable& sym, double c_minus, double t, std::size_t i);
double u_hat_pm(const SymbolTable& sym, double c_minus, double phi_mm, double t, std::size_t i);
double u_hat_pp(const SymbolTable& sym, double c_plus, double c_minus, double phi_mm,
                double phi_pm, double t, std::size_t i);

// Constant parts of the pair solution, written with divided differences so
// they stay finite for every parameter combination.
double pair_constant_mm(const ModelParams& params, const SecondOrderInit& init2, double t);
double pair_constant_pm(const ModelParams& params, const SecondOrderInit& init2, double t);
double pair_constant_pp(const ModelParams& params, const SecondOrderInit& init2, double t);

// Closed-form pair state at time t.  When lambda+ == lambda- the constant
// parts of the classical solution degenerate (they divide by mu- - mu+), so
// the whole state is produced by the ODE fallback and flagged via_oracle.
SecondOrderState k2_closed(const SecondOrderProblem& prob, double t,
                           Backend backend = Backend::openmp);

struct SecondOrderDeriv {
    double dc_mm = 0.0;
    double dc_pm = 0.0;
    double dc_pp = 0.0;
    cvector dfluct_mm, dfluct_pm, dfluct_pp;
};

// Frequency-space pair dynamics.  state1 supplies the first-moment constants
// driving the birth sources; it must be translation invariant (no psi).
// Channel bookkeeping: a constant c convolved with a unit-mass kernel feeds
// lambda*c into the constant channel, an integrable field feeds
// lambda*ahat(p)*F(p) into the fluctuation channel.
SecondOrderDeriv second_order_rhs(const SecondOrderProblem& prob, const SecondOrderState& state2,
                                  const FirstOrderState& state1,
                                  Backend backend = Backend::openmp);

// RK4 oracle for the pair system, integrated jointly with the first-moment
// constants; shares no code with the closed forms.
SecondOrderState evolve_ode2(const SecondOrderProblem& prob, double t_end, double dt,
                             Backend backend = Backend::openmp);

// Long-time pair spectra.  Case 1 produces the (+,+) profile only; case 2
// produces all three.  Frequency side on the grid with the p=0 slot filled by
// radial extrapolation (see limits_second), space side by inverse transform.
struct LimitSpectra {
    std::vector<double> omega_pp_hat;
    std::vector<double> xi_mm_hat, xi_pm_hat, xi_pp_hat;
    std::vector<double> omega_pp;
    std::vector<double> xi_mm, xi_pm, xi_pp;
};

struct SecondOrderLimits {
    int dichotomy_case = 0;  // 1: lambda+ = 1 > lambda-,  2: lambda- = 1 > lambda+
    AsymptoticVerdict mm, pm, pp;
    LimitSpectra spectra;
    // relative mismatch at the origin between the lattice inverse transform
    // and an independent radial quadrature; negative when not performed
    double radial_check_rel_err = -1.0;
    std::string note;
};

SecondOrderLimits limits_second(const ModelParams& params, const FirstOrderInit& init1,
                                const SecondOrderInit& init2, const FourierGrid& grid);

// Radial profiles of the limit spectra at |p| = q.  alt_form selects an
// alternative simplification kept for cross-checking; it matches the primary
// form only when the two contact kernels coincide (xi_pp) resp. only up to
// the memory of c_minus (omega_pp).
double xi_mm_spectrum(const ModelParams& params, double c_minus, double q);
double xi_pm_spectrum(const ModelParams& params, double c_minus, double q);
double xi_pp_spectrum(const ModelParams& params, double c_minus, double q, bool alt_form = false);
double omega_pp_spectrum(const ModelParams& params, double c_plus, double c_minus, double q,
                         bool alt_form = false);

// Centred pair functions k2 - k1 (x) k1 (zero for a Poisson field).
struct UrsellFields {
    SplitField mm, pm, pp;
    double t = 0.0;
};
UrsellFields ursell(const SecondOrderState& state2, const FirstOrderState& state1);

}  // namespace contact
