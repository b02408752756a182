#include "contact/evolution2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contact/quadrature.hpp"

namespace contact {

namespace {

bool effectively_zero(const std::vector<double>& v) {
    for (double x : v)
        if (x != 0.0) return false;
    return true;
}

void require_translation_invariant(const FirstOrderInit& init1, const SecondOrderInit& init2) {
    if (!init2.translation_invariant)
        throw std::invalid_argument("pair dynamics: translation-invariant initial data required");
    if (!effectively_zero(init1.psi_plus) || !effectively_zero(init1.psi_minus))
        throw std::invalid_argument(
            "pair dynamics: first-moment fluctuations must vanish in the translation-invariant regime");
}

// Scalar coefficients of the pair fluctuation solution at one frequency:
//   v_mm = e^{2 f- t} phi_mm + mm_c
//   v_pm = e^{(f+ + f-) t} phi_pm + pm_mm * phi_mm + pm_c
//   v_pp = e^{2 f+ t} phi_pp + pp_pm * phi_pm + pp_mm * phi_mm + pp_c
// where the _c parts collect the first-moment driven birth integrals.
struct PairCoeffs {
    double tr_mm, tr_pm, tr_pp;
    double mm_c;
    double pm_c, pm_mm;
    double pp_c, pp_pm, pp_mm;
};

PairCoeffs pair_coeffs(const SymbolTable& s, double c_plus, double c_minus, double t,
                       std::size_t i) {
    const double lp = s.lambda_plus, lm = s.lambda_minus, lam = s.lambda_cross;
    const double mup = s.mu_plus, mum = s.mu_minus;
    const double ap = s.ahat_plus[i], am = s.ahat_minus[i], ax = s.ahat_cross[i];
    const double fp = s.f_plus[i], fm = s.f_minus[i], h3 = s.h3[i];

    PairCoeffs c;
    c.tr_mm = std::exp(2.0 * fm * t);
    c.tr_pm = std::exp(h3 * t);
    c.tr_pp = std::exp(2.0 * fp * t);

    c.mm_c = 2.0 * lm * am * c_minus * phi1(2.0 * fm, mum, t);

    c.pm_mm = lam * ax * phi1(h3, 2.0 * fm, t);
    c.pm_c = lam * ax * c_minus *
             (phi1(h3, mum, t) + 2.0 * lm * am * phi2(h3, 2.0 * fm, mum, t));

    c.pp_pm = 2.0 * lam * ax * phi1(2.0 * fp, h3, t);
    c.pp_mm = 2.0 * lam * lam * ax * ax * phi2(2.0 * fp, h3, 2.0 * fm, t);
    c.pp_c = 2.0 * lp * ap *
                 (c_plus * phi1(2.0 * fp, mup, t) + lam * c_minus * phi2(2.0 * fp, mum, mup, t)) +
             2.0 * lam * lam * ax * ax * c_minus *
                 (phi2(2.0 * fp, h3, mum, t) +
                  2.0 * lm * am * phi3(2.0 * fp, h3, 2.0 * fm, mum, t));
    return c;
}

double omega_pp_val(const ModelParams& p, double c_plus, double c_minus, double ap, bool alt) {
    double coef = alt ? (p.lambda_minus + p.lambda_cross - 1.0) / (p.lambda_minus - 1.0) * c_plus
                      : c_plus + p.lambda_cross * c_minus / (1.0 - p.lambda_minus);
    return coef * ap / (1.0 - ap);
}

double xi_mm_val(double c_minus, double am) { return c_minus * am / (1.0 - am); }

double xi_pm_val(const ModelParams& p, double c_minus, double ap, double am, double ax) {
    return p.lambda_cross * c_minus * ax / ((2.0 - p.lambda_plus * ap - am) * (1.0 - am));
}

double xi_pp_val(const ModelParams& p, double c_minus, double ap, double am, double ax, bool alt) {
    double den = (2.0 - p.lambda_plus * ap - (alt ? ap : am)) * (1.0 - am);
    return p.lambda_cross / (1.0 - p.lambda_plus * ap) *
           (p.lambda_plus * c_minus * ap / (1.0 - p.lambda_plus) +
            p.lambda_cross * c_minus * ax * ax / den);
}

// average of |u|^{-2} over the unit cube cell around the origin, d = 3;
// finite because the surface distance R(w) = 1/(2 max|w_i|) is bounded:
//   int_cell |u|^{-2} du = int_{S^2} R(w) dOmega
double cell_inverse_square_integral_3d() {
    static const double value = [] {
        auto over_phi = [](double c) {
            double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            return integrate_panels(
                [&](double phi) {
                    double mx = std::max({std::abs(s * std::cos(phi)), std::abs(s * std::sin(phi)),
                                          std::abs(c)});
                    return 1.0 / (2.0 * mx);
                },
                0.0, 2.0 * 3.14159265358979323846, 96);
        };
        return integrate_panels(over_phi, -1.0, 1.0, 96);
    }();
    return value;
}

// fill value for the p = 0 slot: fit v(q) = A/q^2 + B on the two innermost
// shells and equate the center-cell lattice weight to the exact cell integral
// of the fitted profile (d = 3); lower dimensions fall back to the nearest
// shell value.
double extrapolate_origin(const FourierGrid& grid, const std::vector<double>& hat,
                          std::string* note) {
    double q1 = 0.0, q2 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double q = grid.freq_norm(i);
        if (q == 0.0) continue;
        if (q1 == 0.0 || q < q1) q1 = q;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double q = grid.freq_norm(i);
        if (q <= q1 * (1.0 + 1e-9)) continue;
        if (q2 == 0.0 || q < q2) q2 = q;
    }
    double v1 = 0.0, v2 = 0.0;
    int n1 = 0, n2 = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double q = grid.freq_norm(i);
        if (q == 0.0) continue;
        if (q <= q1 * (1.0 + 1e-9)) {
            v1 += hat[i]; ++n1;
        } else if (q <= q2 * (1.0 + 1e-9)) {
            v2 += hat[i]; ++n2;
        }
    }
    v1 /= n1;
    v2 /= n2;
    double A = (v1 - v2) * q1 * q1 * q2 * q2 / (q2 * q2 - q1 * q1);
    double B = v1 - A / (q1 * q1);
    if (grid.dim() == 3) {
        double dp = grid.dp();
        return A * cell_inverse_square_integral_3d() / (dp * dp) + B;
    }
    if (note && note->empty())
        *note = "p=0 slot filled with the innermost shell value (cell-exact fill needs d=3)";
    return v1;
}

}  // namespace

SecondOrderProblem SecondOrderProblem::prepare(const ModelParams& params,
                                               const FirstOrderInit& init1,
                                               const SecondOrderInit& init2,
                                               const FourierGrid& grid) {
    require_translation_invariant(init1, init2);
    SecondOrderProblem prob{params, grid, build_symbols(params, grid), init1, init2, {}, {}, {}};
    FourierTransformer ft(grid);
    auto hat_or_zero = [&](const std::vector<double>& space) {
        if (space.empty() || effectively_zero(space)) return cvector(grid.size(), {0.0, 0.0});
        return ft.forward_real(space);
    };
    prob.phi_mm_hat = hat_or_zero(init2.phi_mm);
    prob.phi_pm_hat = hat_or_zero(init2.phi_pm);
    prob.phi_pp_hat = hat_or_zero(init2.phi_pp);
    return prob;
}

double u_hat_mm(const SymbolTable& sym, double c_minus, double t, std::size_t i) {
    return pair_coeffs(sym, 0.0, c_minus, t, i).mm_c;
}

double u_hat_pm(const SymbolTable& sym, double c_minus, double phi_mm, double t, std::size_t i) {
    PairCoeffs c = pair_coeffs(sym, 0.0, c_minus, t, i);
    return c.pm_c + c.pm_mm * phi_mm;
}

double u_hat_pp(const SymbolTable& sym, double c_plus, double c_minus, double phi_mm,
                double phi_pm, double t, std::size_t i) {
    PairCoeffs c = pair_coeffs(sym, c_plus, c_minus, t, i);
    return c.pp_c + c.pp_pm * phi_pm + c.pp_mm * phi_mm;
}

double pair_constant_mm(const ModelParams& params, const SecondOrderInit& init2, double t) {
    return init2.c_mm * std::exp(2.0 * params.mu_minus() * t);
}

double pair_constant_pm(const ModelParams& params, const SecondOrderInit& init2, double t) {
    const double mup = params.mu_plus(), mum = params.mu_minus();
    return init2.c_pm * std::exp((mup + mum) * t) +
           params.lambda_cross * init2.c_mm * phi1(mup + mum, 2.0 * mum, t);
}

double pair_constant_pp(const ModelParams& params, const SecondOrderInit& init2, double t) {
    const double mup = params.mu_plus(), mum = params.mu_minus();
    const double lam = params.lambda_cross;
    return init2.c_pp * std::exp(2.0 * mup * t) +
           2.0 * lam * init2.c_pm * phi1(2.0 * mup, mup + mum, t) +
           2.0 * lam * lam * init2.c_mm * phi2(2.0 * mup, mup + mum, 2.0 * mum, t);
}

SecondOrderState k2_closed(const SecondOrderProblem& prob, double t, Backend backend) {
    if (t < 0.0) throw std::invalid_argument("k2_closed: t must be nonnegative");
    if (prob.params.lambda_plus == prob.params.lambda_minus) {
        double worst = std::max(std::abs(prob.sym.mu_plus), std::abs(prob.sym.mu_minus));
        for (std::size_t i = 0; i < prob.grid.size(); ++i)
            worst = std::max({worst, std::abs(prob.sym.f_plus[i]), std::abs(prob.sym.f_minus[i])});
        double dt = std::min(0.01, 0.2 / std::max(1.0, 2.0 * worst));
        return evolve_ode2(prob, t, dt, backend);
    }

    const SymbolTable& s = prob.sym;

    SecondOrderState st;
    st.t = t;
    st.k_mm.constant = pair_constant_mm(prob.params, prob.init2, t);
    st.k_pm.constant = pair_constant_pm(prob.params, prob.init2, t);
    st.k_pp.constant = pair_constant_pp(prob.params, prob.init2, t);

    std::size_t m = prob.grid.size();
    st.k_mm.fluct_hat.resize(m);
    st.k_pm.fluct_hat.resize(m);
    st.k_pp.fluct_hat.resize(m);
    const double cp = prob.init1.c_plus, cm = prob.init1.c_minus;
    map_lattice(m, backend, [&](std::size_t i) {
        PairCoeffs c = pair_coeffs(s, cp, cm, t, i);
        st.k_mm.fluct_hat[i] = c.tr_mm * prob.phi_mm_hat[i] + c.mm_c;
        st.k_pm.fluct_hat[i] =
            c.tr_pm * prob.phi_pm_hat[i] + c.pm_mm * prob.phi_mm_hat[i] + c.pm_c;
        st.k_pp.fluct_hat[i] = c.tr_pp * prob.phi_pp_hat[i] + c.pp_pm * prob.phi_pm_hat[i] +
                               c.pp_mm * prob.phi_mm_hat[i] + c.pp_c;
    });
    return st;
}

SecondOrderDeriv second_order_rhs(const SecondOrderProblem& prob, const SecondOrderState& state2,
                                  const FirstOrderState& state1, Backend backend) {
    if ((state1.k_minus.has_fluct() && sup_abs(state1.k_minus.fluct_hat) != 0.0) ||
        (state1.k_plus.has_fluct() && sup_abs(state1.k_plus.fluct_hat) != 0.0))
        throw std::invalid_argument("second_order_rhs: first-order state must be spatially constant");
    const SymbolTable& s = prob.sym;
    const double lam = prob.params.lambda_cross;
    const double cm = state1.k_minus.constant, cp = state1.k_plus.constant;

    SecondOrderDeriv d;
    d.dc_mm = 2.0 * s.mu_minus * state2.k_mm.constant;
    d.dc_pm = (s.mu_plus + s.mu_minus) * state2.k_pm.constant + lam * state2.k_mm.constant;
    d.dc_pp = 2.0 * s.mu_plus * state2.k_pp.constant + 2.0 * lam * state2.k_pm.constant;

    std::size_t m = prob.grid.size();
    bool have = state2.k_mm.has_fluct();
    d.dfluct_mm.assign(m, {0.0, 0.0});
    d.dfluct_pm.assign(m, {0.0, 0.0});
    d.dfluct_pp.assign(m, {0.0, 0.0});
    map_lattice(m, backend, [&](std::size_t i) {
        std::complex<double> vmm = have ? state2.k_mm.fluct_hat[i] : std::complex<double>{};
        std::complex<double> vpm =
            state2.k_pm.has_fluct() ? state2.k_pm.fluct_hat[i] : std::complex<double>{};
        std::complex<double> vpp =
            state2.k_pp.has_fluct() ? state2.k_pp.fluct_hat[i] : std::complex<double>{};
        d.dfluct_mm[i] = 2.0 * s.f_minus[i] * vmm + 2.0 * s.lambda_minus * s.ahat_minus[i] * cm;
        d.dfluct_pm[i] = s.h3[i] * vpm + lam * s.ahat_cross[i] * (cm + vmm);
        d.dfluct_pp[i] = 2.0 * s.f_plus[i] * vpp + 2.0 * s.lambda_plus * s.ahat_plus[i] * cp +
                         2.0 * lam * s.ahat_cross[i] * vpm;
    });
    return d;
}

SecondOrderState evolve_ode2(const SecondOrderProblem& prob, double t_end, double dt,
                             Backend backend) {
    if (!(dt > 0.0)) throw std::invalid_argument("evolve_ode2: dt must be positive");
    double worst = std::max(std::abs(prob.sym.mu_plus), std::abs(prob.sym.mu_minus));
    for (std::size_t i = 0; i < prob.grid.size(); ++i)
        worst = std::max({worst, std::abs(prob.sym.f_plus[i]), std::abs(prob.sym.f_minus[i])});
    if (dt * 2.0 * worst >= 0.5)
        throw std::invalid_argument("evolve_ode2: dt too large for stability");

    std::size_t m = prob.grid.size();
    SecondOrderState st;
    st.t = 0.0;
    st.via_oracle = true;
    st.k_mm = make_field(prob.init2.c_mm, prob.phi_mm_hat);
    st.k_pm = make_field(prob.init2.c_pm, prob.phi_pm_hat);
    st.k_pp = make_field(prob.init2.c_pp, prob.phi_pp_hat);
    double c_minus = prob.init1.c_minus;
    double c_plus = prob.init1.c_plus;
    const double lam = prob.params.lambda_cross;

    auto first_state = [&](double cmv, double cpv) {
        FirstOrderState f;
        f.k_minus.constant = cmv;
        f.k_plus.constant = cpv;
        return f;
    };
    struct Stage {
        double dcm, dcp;
        SecondOrderDeriv d2;
    };
    auto stage_at = [&](const SecondOrderState& s2, double cmv, double cpv) {
        Stage g;
        g.dcm = prob.sym.mu_minus * cmv;
        g.dcp = prob.sym.mu_plus * cpv + lam * cmv;
        g.d2 = second_order_rhs(prob, s2, first_state(cmv, cpv), backend);
        return g;
    };
    auto shifted = [&](const Stage& g, double h, SecondOrderState base) {
        base.k_mm.constant += h * g.d2.dc_mm;
        base.k_pm.constant += h * g.d2.dc_pm;
        base.k_pp.constant += h * g.d2.dc_pp;
        map_lattice(m, backend, [&](std::size_t i) {
            base.k_mm.fluct_hat[i] += h * g.d2.dfluct_mm[i];
            base.k_pm.fluct_hat[i] += h * g.d2.dfluct_pm[i];
            base.k_pp.fluct_hat[i] += h * g.d2.dfluct_pp[i];
        });
        return base;
    };

    long long nsteps = static_cast<long long>(std::ceil(t_end / dt - 1e-12));
    for (long long step = 0; step < nsteps; ++step) {
        double h = std::min(dt, t_end - st.t);
        Stage g1 = stage_at(st, c_minus, c_plus);
        Stage g2 = stage_at(shifted(g1, 0.5 * h, st), c_minus + 0.5 * h * g1.dcm,
                            c_plus + 0.5 * h * g1.dcp);
        Stage g3 = stage_at(shifted(g2, 0.5 * h, st), c_minus + 0.5 * h * g2.dcm,
                            c_plus + 0.5 * h * g2.dcp);
        Stage g4 = stage_at(shifted(g3, h, st), c_minus + h * g3.dcm, c_plus + h * g3.dcp);

        auto mix = [&](double a, double b, double c, double d) {
            return h / 6.0 * (a + 2.0 * b + 2.0 * c + d);
        };
        c_minus += mix(g1.dcm, g2.dcm, g3.dcm, g4.dcm);
        c_plus += mix(g1.dcp, g2.dcp, g3.dcp, g4.dcp);
        st.k_mm.constant += mix(g1.d2.dc_mm, g2.d2.dc_mm, g3.d2.dc_mm, g4.d2.dc_mm);
        st.k_pm.constant += mix(g1.d2.dc_pm, g2.d2.dc_pm, g3.d2.dc_pm, g4.d2.dc_pm);
        st.k_pp.constant += mix(g1.d2.dc_pp, g2.d2.dc_pp, g3.d2.dc_pp, g4.d2.dc_pp);
        map_lattice(m, backend, [&](std::size_t i) {
            st.k_mm.fluct_hat[i] +=
                h / 6.0 * (g1.d2.dfluct_mm[i] + 2.0 * g2.d2.dfluct_mm[i] +
                           2.0 * g3.d2.dfluct_mm[i] + g4.d2.dfluct_mm[i]);
            st.k_pm.fluct_hat[i] +=
                h / 6.0 * (g1.d2.dfluct_pm[i] + 2.0 * g2.d2.dfluct_pm[i] +
                           2.0 * g3.d2.dfluct_pm[i] + g4.d2.dfluct_pm[i]);
            st.k_pp.fluct_hat[i] +=
                h / 6.0 * (g1.d2.dfluct_pp[i] + 2.0 * g2.d2.dfluct_pp[i] +
                           2.0 * g3.d2.dfluct_pp[i] + g4.d2.dfluct_pp[i]);
        });
        st.t += h;
    }
    return st;
}

double xi_mm_spectrum(const ModelParams& params, double c_minus, double q) {
    return xi_mm_val(c_minus, ahat_minus_at(params, q));
}

double xi_pm_spectrum(const ModelParams& params, double c_minus, double q) {
    return xi_pm_val(params, c_minus, ahat_plus_at(params, q), ahat_minus_at(params, q),
                     ahat_cross_at(params, q));
}

double xi_pp_spectrum(const ModelParams& params, double c_minus, double q, bool alt_form) {
    return xi_pp_val(params, c_minus, ahat_plus_at(params, q), ahat_minus_at(params, q),
                     ahat_cross_at(params, q), alt_form);
}

double omega_pp_spectrum(const ModelParams& params, double c_plus, double c_minus, double q,
                         bool alt_form) {
    return omega_pp_val(params, c_plus, c_minus, ahat_plus_at(params, q), alt_form);
}

SecondOrderLimits limits_second(const ModelParams& params, const FirstOrderInit& init1,
                                const SecondOrderInit& init2, const FourierGrid& grid) {
    require_translation_invariant(init1, init2);
    const double lp = params.lambda_plus, lm = params.lambda_minus, lam = params.lambda_cross;
    bool case1 = lp == 1.0 && lm > 0.0 && lm < 1.0;
    bool case2 = lm == 1.0 && lp > 0.0 && lp < 1.0;
    if (!case1 && !case2)
        throw std::invalid_argument(
            "pair limits: case not covered, need exactly one critical system "
            "(lambda+ = 1 > lambda- > 0 or lambda- = 1 > lambda+ > 0)");

    SecondOrderLimits out;
    SymbolTable s = build_symbols(params, grid);
    FourierTransformer ft(grid);
    const double cm = init1.c_minus, cp = init1.c_plus;

    auto build = [&](auto&& value_at) {
        std::vector<double> hat(grid.size(), 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid.freq_norm(i) == 0.0) continue;
            hat[i] = value_at(i);
        }
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid.freq_norm(i) == 0.0) hat[i] = extrapolate_origin(grid, hat, &out.note);
        return hat;
    };
    auto space_side = [&](const std::vector<double>& hat) {
        cvector tmp(hat.size());
        for (std::size_t i = 0; i < hat.size(); ++i) tmp[i] = hat[i];
        return ft.inverse_real_part(tmp);
    };

    if (case1) {
        out.dichotomy_case = 1;
        out.mm = AsymptoticVerdict::zero();
        out.pm = AsymptoticVerdict::zero();
        out.pp = AsymptoticVerdict::finite(init2.c_pp + 2.0 * lam * init2.c_pm / (1.0 - lm) +
                                           lam * lam * init2.c_mm / ((1.0 - lm) * (1.0 - lm)));
        out.spectra.omega_pp_hat =
            build([&](std::size_t i) { return omega_pp_val(params, cp, cm, s.ahat_plus[i], false); });
        out.spectra.omega_pp = space_side(out.spectra.omega_pp_hat);
    } else {
        out.dichotomy_case = 2;
        out.mm = AsymptoticVerdict::finite(init2.c_mm);
        out.pm = AsymptoticVerdict::finite(lam * init2.c_mm / (1.0 - lp));
        out.pp = AsymptoticVerdict::finite(lam * lam * init2.c_mm / ((1.0 - lp) * (1.0 - lp)));
        out.spectra.xi_mm_hat = build([&](std::size_t i) { return xi_mm_val(cm, s.ahat_minus[i]); });
        out.spectra.xi_pm_hat = build([&](std::size_t i) {
            return xi_pm_val(params, cm, s.ahat_plus[i], s.ahat_minus[i], s.ahat_cross[i]);
        });
        out.spectra.xi_pp_hat = build([&](std::size_t i) {
            return xi_pp_val(params, cm, s.ahat_plus[i], s.ahat_minus[i], s.ahat_cross[i], false);
        });
        out.spectra.xi_mm = space_side(out.spectra.xi_mm_hat);
        out.spectra.xi_pm = space_side(out.spectra.xi_pm_hat);
        out.spectra.xi_pp = space_side(out.spectra.xi_pp_hat);
    }

    // independent check of the origin fill: compare the lattice profile at
    // x = 0 against the continuum radial integral (1/2pi^2) int q^2 v(q) dq
    bool gaussian = params.kernel_plus.family() == KernelFamily::gaussian &&
                    params.kernel_minus.family() == KernelFamily::gaussian &&
                    params.kernel_cross.family() == KernelFamily::gaussian;
    if (grid.dim() == 3 && gaussian) {
        double sigma = std::min({params.kernel_plus.scale(), params.kernel_minus.scale(),
                                 params.kernel_cross.scale()});
        double qmax = 45.0 / sigma;
        auto quad_at_zero = [&](auto&& radial) {
            return integrate_panels([&](double q) { return q * q * radial(q); }, 0.0, qmax, 512) /
                   (2.0 * 3.14159265358979323846 * 3.14159265358979323846);
        };
        double worst = 0.0;
        auto check = [&](const std::vector<double>& space, auto&& radial) {
            if (space.empty()) return;
            double quad = quad_at_zero(radial);
            if (quad == 0.0) return;
            worst = std::max(worst, std::abs(space[0] - quad) / std::abs(quad));
        };
        check(out.spectra.omega_pp,
              [&](double q) { return omega_pp_spectrum(params, cp, cm, q, false); });
        check(out.spectra.xi_mm, [&](double q) { return xi_mm_spectrum(params, cm, q); });
        check(out.spectra.xi_pm, [&](double q) { return xi_pm_spectrum(params, cm, q); });
        check(out.spectra.xi_pp, [&](double q) { return xi_pp_spectrum(params, cm, q, false); });
        out.radial_check_rel_err = worst;
    } else if (out.note.empty()) {
        out.note = "radial cross-check skipped (needs d=3 and gaussian kernels)";
    }
    return out;
}

UrsellFields ursell(const SecondOrderState& state2, const FirstOrderState& state1) {
    if (std::abs(state2.t - state1.t) > 1e-12 * std::max(1.0, std::abs(state2.t)))
        throw std::invalid_argument("ursell: states taken at different times");
    if ((state1.k_minus.has_fluct() && sup_abs(state1.k_minus.fluct_hat) != 0.0) ||
        (state1.k_plus.has_fluct() && sup_abs(state1.k_plus.fluct_hat) != 0.0))
        throw std::invalid_argument("ursell: first-order state must be spatially constant");
    UrsellFields u;
    u.t = state2.t;
    const double cm = state1.k_minus.constant, cp = state1.k_plus.constant;
    u.mm = make_field(state2.k_mm.constant - cm * cm, state2.k_mm.fluct_hat);
    u.pm = make_field(state2.k_pm.constant - cp * cm, state2.k_pm.fluct_hat);
    u.pp = make_field(state2.k_pp.constant - cp * cp, state2.k_pp.fluct_hat);
    return u;
}

}  // namespace contact
