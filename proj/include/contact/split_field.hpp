#pragma once

#include <complex>
#include <vector>

#include "contact/fft.hpp"
#include "contact/grid.hpp"

namespace contact {

// Correlation function written as (spatial constant) + (integrable
// fluctuation); the fluctuation is kept in frequency space on the grid.
// A real fluctuation in space corresponds to conjugate symmetry
// F(-p) = conj(F(p)) on the lattice.
struct SplitField {
    double constant = 0.0;
    cvector fluct_hat;

    bool has_fluct() const { return !fluct_hat.empty(); }
};

SplitField make_constant_field(double c);
SplitField make_field(double c, cvector fluct_hat);

// largest deviation from conjugate symmetry over the lattice
double conjugate_symmetry_defect(const FourierGrid& grid, const cvector& fhat);

// largest deviation from evenness, i.e. from F(-p) = F(p)
double evenness_defect(const FourierGrid& grid, const cvector& fhat);

double sup_abs(const cvector& v);
double sup_abs(const std::vector<double>& v);

// space-side field values constant + inverse transform of the fluctuation
std::vector<double> space_values(const SplitField& f, const FourierTransformer& ft);

}  // namespace contact
