#pragma once

#include <string>

#include "contact/backend.hpp"
#include "contact/model.hpp"
#include "contact/split_field.hpp"
#include "contact/symbols.hpp"

namespace contact {

struct FirstOrderState {
    SplitField k_minus;
    SplitField k_plus;
    double t = 0.0;
};

// Immutable bundle shared by the closed forms and the ODE oracle: symbols on
// the grid plus the transformed initial fluctuations.
struct FirstOrderProblem {
    ModelParams params;
    FourierGrid grid;
    SymbolTable sym;
    FirstOrderInit init;
    cvector psi_plus_hat;
    cvector psi_minus_hat;

    static FirstOrderProblem prepare(const ModelParams& params, const FirstOrderInit& init,
                                     const FourierGrid& grid);
};

// Closed-form solutions of the first-moment equations.  The minus system is
// autonomous; the plus system picks up an immigration term driven by the
// minus density.
SplitField k_minus_closed(const FirstOrderProblem& prob, double t, Backend backend = Backend::openmp);
SplitField k_plus_closed(const FirstOrderProblem& prob, double t, Backend backend = Backend::openmp);

// Right-hand side of the moment ODE system in frequency space.
struct FirstOrderDeriv {
    double dc_minus = 0.0;
    double dc_plus = 0.0;
    cvector dfluct_minus;
    cvector dfluct_plus;
};
FirstOrderDeriv first_order_rhs(const FirstOrderProblem& prob, const FirstOrderState& state,
                                Backend backend = Backend::openmp);

// RK4 oracle; integrates the same rhs the closed forms solve, independently.
FirstOrderState evolve_ode(const FirstOrderProblem& prob, double t_end, double dt,
                           Backend backend = Backend::openmp);

struct AsymptoticVerdict {
    enum class Kind { zero, finite, diverges };
    Kind kind = Kind::zero;
    double constant = 0.0;   // limit of the constant part for finite verdicts
    std::string note;        // e.g. divergence rate annotation

    static AsymptoticVerdict zero() { return {Kind::zero, 0.0, ""}; }
    static AsymptoticVerdict finite(double c) { return {Kind::finite, c, ""}; }
    static AsymptoticVerdict diverges(std::string n = "") {
        return {Kind::diverges, 0.0, std::move(n)};
    }
};

struct FirstOrderVerdicts {
    AsymptoticVerdict minus;
    AsymptoticVerdict plus;
};

// Long-time classification of the first moments.
FirstOrderVerdicts limit_first(const ModelParams& params, const FirstOrderInit& init);

}  // namespace contact
