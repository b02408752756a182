#include "contact/symbols.hpp"

#include <cmath>

namespace contact {

namespace {

SymbolTable build_symbols_impl(const ModelParams& params, std::size_t m, auto&& q_at) {
    SymbolTable s;
    s.mu_plus = params.mu_plus();
    s.mu_minus = params.mu_minus();
    s.lambda_plus = params.lambda_plus;
    s.lambda_minus = params.lambda_minus;
    s.lambda_cross = params.lambda_cross;
    s.f_plus.resize(m);
    s.f_minus.resize(m);
    s.h1.resize(m);
    s.h2.resize(m);
    s.h3.resize(m);
    s.h4.resize(m);
    s.g1.resize(m);
    s.g2.resize(m);
    s.ahat_plus.resize(m);
    s.ahat_minus.resize(m);
    s.ahat_cross.resize(m);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        std::size_t i = static_cast<std::size_t>(ii);
        double q = q_at(i);
        double ap = params.kernel_plus.fourier_radial(q);
        double am = params.kernel_minus.fourier_radial(q);
        double ax = params.kernel_cross.fourier_radial(q);
        double fp = params.lambda_plus * ap - 1.0;
        double fm = params.lambda_minus * am - 1.0;
        s.ahat_plus[i] = ap;
        s.ahat_minus[i] = am;
        s.ahat_cross[i] = ax;
        s.f_plus[i] = fp;
        s.f_minus[i] = fm;
        s.h1[i] = s.mu_plus - 2.0 * fp;
        s.h2[i] = s.mu_minus - 2.0 * fm;
        s.h3[i] = fp + fm;
        s.h4[i] = s.mu_minus - fp - fm;
        s.g1[i] = fm - fp;
        s.g2[i] = s.mu_minus - 2.0 * fp;
    }
    return s;
}

}  // namespace

SymbolTable build_symbols(const ModelParams& params, const FourierGrid& grid) {
    return build_symbols_impl(params, grid.size(),
                              [&](std::size_t i) { return grid.freq_norm(i); });
}

SymbolTable build_symbols(const ModelParams& params, const std::vector<double>& q_values) {
    return build_symbols_impl(params, q_values.size(),
                              [&](std::size_t i) { return q_values[i]; });
}

double ahat_plus_at(const ModelParams& params, double q) {
    return params.kernel_plus.fourier_radial(q);
}

double ahat_minus_at(const ModelParams& params, double q) {
    return params.kernel_minus.fourier_radial(q);
}

double ahat_cross_at(const ModelParams& params, double q) {
    return params.kernel_cross.fourier_radial(q);
}

double f_plus_at(const ModelParams& params, double q) {
    return params.lambda_plus * ahat_plus_at(params, q) - 1.0;
}

double f_minus_at(const ModelParams& params, double q) {
    return params.lambda_minus * ahat_minus_at(params, q) - 1.0;
}

SingularSetReport check_disjoint_singular_sets(const ModelParams& params, const FourierGrid& grid,
                                               double epsilon) {
    SingularSetReport rep;
    if (params.lambda_plus == params.lambda_minus &&
        params.kernel_plus.family() == params.kernel_minus.family() &&
        params.kernel_plus.scale() == params.kernel_minus.scale()) {
        rep.disjoint = false;
        rep.message = "identical plus/minus dispersion: degenerate sets coincide everywhere";
        return rep;
    }
    SymbolTable s = build_symbols(params, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.freq_norm(i) == 0.0) continue;  // both vanish at p = 0 by construction
        if (std::abs(s.g1[i]) < epsilon && std::abs(s.g2[i]) < epsilon) {
            rep.disjoint = false;
            rep.message = "degenerate sets overlap at a nonzero lattice frequency";
            return rep;
        }
    }
    return rep;
}

}  // namespace contact
