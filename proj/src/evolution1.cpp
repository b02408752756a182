#include "contact/evolution1.hpp"

#include <cmath>
#include <stdexcept>

namespace contact {

FirstOrderProblem FirstOrderProblem::prepare(const ModelParams& params, const FirstOrderInit& init,
                                             const FourierGrid& grid) {
    FirstOrderProblem prob{params, grid, build_symbols(params, grid), init, {}, {}};
    FourierTransformer ft(grid);
    if (!init.psi_plus.empty()) prob.psi_plus_hat = ft.forward_real(init.psi_plus);
    if (!init.psi_minus.empty()) prob.psi_minus_hat = ft.forward_real(init.psi_minus);
    return prob;
}

SplitField k_minus_closed(const FirstOrderProblem& prob, double t, Backend backend) {
    SplitField out;
    out.constant = prob.init.c_minus * std::exp(prob.sym.mu_minus * t);
    if (!prob.psi_minus_hat.empty()) {
        out.fluct_hat.resize(prob.grid.size());
        const auto& fm = prob.sym.f_minus;
        const auto& psi = prob.psi_minus_hat;
        auto& dst = out.fluct_hat;
        map_lattice(prob.grid.size(), backend,
                    [&](std::size_t i) { dst[i] = std::exp(t * fm[i]) * psi[i]; });
    }
    return out;
}

SplitField k_plus_closed(const FirstOrderProblem& prob, double t, Backend backend) {
    const SymbolTable& s = prob.sym;
    double lam = prob.params.lambda_cross;
    SplitField out;
    out.constant = prob.init.c_plus * std::exp(s.mu_plus * t) +
                   lam * prob.init.c_minus * phi1(s.mu_minus, s.mu_plus, t);
    bool have_p = !prob.psi_plus_hat.empty();
    bool have_m = !prob.psi_minus_hat.empty();
    if (have_p || have_m) {
        out.fluct_hat.assign(prob.grid.size(), {0.0, 0.0});
        auto& dst = out.fluct_hat;
        map_lattice(prob.grid.size(), backend, [&](std::size_t i) {
            std::complex<double> v{0.0, 0.0};
            if (have_p) v += std::exp(t * s.f_plus[i]) * prob.psi_plus_hat[i];
            if (have_m)
                v += lam * s.ahat_cross[i] * prob.psi_minus_hat[i] *
                     phi1(s.f_minus[i], s.f_plus[i], t);
            dst[i] = v;
        });
    }
    return out;
}

FirstOrderDeriv first_order_rhs(const FirstOrderProblem& prob, const FirstOrderState& state,
                                Backend backend) {
    const SymbolTable& s = prob.sym;
    double lam = prob.params.lambda_cross;
    FirstOrderDeriv d;
    d.dc_minus = s.mu_minus * state.k_minus.constant;
    d.dc_plus = s.mu_plus * state.k_plus.constant + lam * state.k_minus.constant;
    bool have_m = state.k_minus.has_fluct();
    bool have_p = state.k_plus.has_fluct();
    if (have_m) d.dfluct_minus.resize(prob.grid.size());
    if (have_p || have_m) d.dfluct_plus.assign(prob.grid.size(), {0.0, 0.0});
    map_lattice(prob.grid.size(), backend, [&](std::size_t i) {
        std::complex<double> km = have_m ? state.k_minus.fluct_hat[i] : std::complex<double>{};
        if (have_m) d.dfluct_minus[i] = s.f_minus[i] * km;
        if (have_p || have_m) {
            std::complex<double> kp = have_p ? state.k_plus.fluct_hat[i] : std::complex<double>{};
            d.dfluct_plus[i] = s.f_plus[i] * kp + lam * s.ahat_cross[i] * km;
        }
    });
    return d;
}

FirstOrderState evolve_ode(const FirstOrderProblem& prob, double t_end, double dt, Backend backend) {
    if (!(dt > 0.0)) throw std::invalid_argument("evolve_ode: dt must be positive");
    double worst = 0.0;
    for (std::size_t i = 0; i < prob.grid.size(); ++i)
        worst = std::max({worst, std::abs(prob.sym.f_plus[i]), std::abs(prob.sym.f_minus[i])});
    worst = std::max({worst, std::abs(prob.sym.mu_plus), std::abs(prob.sym.mu_minus)});
    if (dt * worst >= 0.5) throw std::invalid_argument("evolve_ode: dt too large for stability");

    FirstOrderState st;
    st.t = 0.0;
    st.k_minus.constant = prob.init.c_minus;
    st.k_plus.constant = prob.init.c_plus;
    st.k_minus.fluct_hat = prob.psi_minus_hat;
    if (!prob.psi_plus_hat.empty())
        st.k_plus.fluct_hat = prob.psi_plus_hat;
    else if (!prob.psi_minus_hat.empty())
        st.k_plus.fluct_hat.assign(prob.grid.size(), {0.0, 0.0});

    auto axpy = [&](FirstOrderState base, const FirstOrderDeriv& d, double h) {
        base.k_minus.constant += h * d.dc_minus;
        base.k_plus.constant += h * d.dc_plus;
        if (!d.dfluct_minus.empty())
            map_lattice(base.k_minus.fluct_hat.size(), backend,
                        [&](std::size_t i) { base.k_minus.fluct_hat[i] += h * d.dfluct_minus[i]; });
        if (!d.dfluct_plus.empty())
            map_lattice(base.k_plus.fluct_hat.size(), backend,
                        [&](std::size_t i) { base.k_plus.fluct_hat[i] += h * d.dfluct_plus[i]; });
        return base;
    };

    long long nsteps = static_cast<long long>(std::ceil(t_end / dt - 1e-12));
    for (long long step = 0; step < nsteps; ++step) {
        double h = std::min(dt, t_end - st.t);
        FirstOrderDeriv k1 = first_order_rhs(prob, st, backend);
        FirstOrderDeriv k2 = first_order_rhs(prob, axpy(st, k1, 0.5 * h), backend);
        FirstOrderDeriv k3 = first_order_rhs(prob, axpy(st, k2, 0.5 * h), backend);
        FirstOrderDeriv k4 = first_order_rhs(prob, axpy(st, k3, h), backend);
        st.k_minus.constant +=
            h / 6.0 * (k1.dc_minus + 2.0 * k2.dc_minus + 2.0 * k3.dc_minus + k4.dc_minus);
        st.k_plus.constant +=
            h / 6.0 * (k1.dc_plus + 2.0 * k2.dc_plus + 2.0 * k3.dc_plus + k4.dc_plus);
        if (!k1.dfluct_minus.empty()) {
            auto& v = st.k_minus.fluct_hat;
            map_lattice(v.size(), backend, [&](std::size_t i) {
                v[i] += h / 6.0 *
                        (k1.dfluct_minus[i] + 2.0 * k2.dfluct_minus[i] + 2.0 * k3.dfluct_minus[i] +
                         k4.dfluct_minus[i]);
            });
        }
        if (!k1.dfluct_plus.empty()) {
            auto& v = st.k_plus.fluct_hat;
            map_lattice(v.size(), backend, [&](std::size_t i) {
                v[i] += h / 6.0 *
                        (k1.dfluct_plus[i] + 2.0 * k2.dfluct_plus[i] + 2.0 * k3.dfluct_plus[i] +
                         k4.dfluct_plus[i]);
            });
        }
        st.t += h;
    }
    return st;
}

FirstOrderVerdicts limit_first(const ModelParams& params, const FirstOrderInit& init) {
    const double lp = params.lambda_plus;
    const double lm = params.lambda_minus;
    const double lam = params.lambda_cross;
    auto critical = [](double l) { return l == 1.0; };

    FirstOrderVerdicts v;
    if (lm < 1.0)
        v.minus = AsymptoticVerdict::zero();
    else if (critical(lm))
        v.minus = AsymptoticVerdict::finite(init.c_minus);
    else
        v.minus = AsymptoticVerdict::diverges();

    if (lp > 1.0 || lm > 1.0) {
        v.plus = AsymptoticVerdict::diverges();
    } else if (critical(lp) && critical(lm)) {
        v.plus = AsymptoticVerdict::diverges("linear");
    } else if (critical(lp)) {
        v.plus = AsymptoticVerdict::finite(init.c_plus + lam * init.c_minus / (1.0 - lm));
    } else if (critical(lm)) {
        v.plus = AsymptoticVerdict::finite(lam * init.c_minus / (1.0 - lp));
    } else {
        v.plus = AsymptoticVerdict::zero();
    }
    return v;
}

}  // namespace contact
