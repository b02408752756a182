#include "contact/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "contact/phi.hpp"
#include "contact/radial.hpp"
#include "contact/symbols.hpp"

namespace contact {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_note(const char* fmt, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

// sup-bounds of the exponential divided differences with all arguments <= 0:
// dropping each factor e^{x s} <= 1 in the nested integrals leaves the
// reciprocal of the product of the remaining magnitudes, so the sharpest
// choice keeps the largest ones.
double bound1(double x, double y) {
    const double m = std::max(std::abs(x), std::abs(y));
    return m > 0.0 ? 1.0 / m : kInf;
}

double bound2(double x, double y, double z) {
    double m[3] = {std::abs(x), std::abs(y), std::abs(z)};
    std::sort(m, m + 3);
    const double prod = m[2] * m[1];
    return prod > 0.0 ? 1.0 / prod : kInf;
}

double bound3(double w, double x, double y, double z) {
    double m[4] = {std::abs(w), std::abs(x), std::abs(y), std::abs(z)};
    std::sort(m, m + 4);
    const double prod = m[3] * m[2] * m[1];
    return prod > 0.0 ? 1.0 / prod : kInf;
}

}  // namespace

IntegrabilityReport check_kernel_integrability(const Kernel& kernel,
                                               const std::function<double(double)>& b_radial,
                                               const std::vector<FourierGrid>& grid_sequence) {
    if (grid_sequence.empty()) throw std::invalid_argument("integrability: empty grid sequence");
    IntegrabilityReport rep;
    for (const auto& grid : grid_sequence) {
        const long long m = static_cast<long long>(grid.size());
        // terms land in a vector first so the final sum has a fixed order and
        // the result cannot depend on the thread count
        std::vector<double> terms(grid.size(), 0.0);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < m; ++i) {
            const double q = grid.freq_norm(static_cast<std::size_t>(i));
            if (q == 0.0) continue;
            const double den = kernel.fourier_radial(q) - 1.0;
            if (den == 0.0) continue;
            terms[i] = std::abs(b_radial(q) / den);
        }
        double sum = 0.0;
        for (double v : terms) sum += v;
        rep.sums.push_back(sum * grid.freq_cell_volume());
    }
    for (std::size_t k = 1; k < rep.sums.size(); ++k) rep.ratios.push_back(rep.sums[k] / rep.sums[k - 1]);
    if (rep.sums.size() >= 2) {
        const auto last = rep.sums.back();
        const auto prev = rep.sums[rep.sums.size() - 2];
        rep.converged = std::abs(last - prev) < 0.05 * std::max(std::abs(last), 1e-300);
    }

    // near-origin behavior of 1 - ahat: log-log slope and the quadratic
    // coefficient m2/(2d) from the kernel's second moment
    const double qref = 1e-3 / kernel.scale();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int npts = 6;
    for (int j = 0; j < npts; ++j) {
        const double q = qref * std::pow(2.0, j);
        const double x = std::log(q);
        const double y = std::log(1.0 - kernel.fourier_radial(q));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    rep.slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    const double expected = kernel.second_moment() * qref * qref / (2.0 * kernel.dim());
    rep.quad_rel_err = std::abs((1.0 - kernel.fourier_radial(qref)) / expected - 1.0);
    rep.note = rep.converged
                   ? "lattice sums stable under refinement, consistent with an integrable ratio"
                   : "lattice sums keep growing under refinement, consistent with divergence";
    return rep;
}

DividedDifferenceBoundReport check_divided_difference_bound(long long num_cases,
                                                            std::mt19937_64& rng) {
    DividedDifferenceBoundReport rep;
    rep.min_margin = kInf;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double lo = std::log(1e-2), hi = std::log(10.0);
    auto draw = [&] { return -std::exp(lo + (hi - lo) * u01(rng)); };
    const int nt = 2000;

    for (long long c = 0; c < num_cases; ++c) {
        const double a = draw();
        const double b = draw();
        const double mag = std::max(std::abs(a), std::abs(b));
        const double dt = 100.0 / mag / nt;
        double best = -1.0;
        int best_k = 0;
        for (int k = 0; k <= nt; ++k) {
            const double t = k * dt;
            const double v = phi1(a, b, t);
            const double margin = -1.0 / b - v;
            if (v < 0.0 || margin <= -1e-12) ++rep.violations;
            rep.min_margin = std::min(rep.min_margin, margin);
            if (v > best) {
                best = v;
                best_k = k;
            }
        }
        ++rep.cases;
        if (std::abs(a - b) > 1e-2 * mag) {
            const double t0 = std::log(a / b) / (b - a);
            if (std::abs(best_k * dt - t0) > dt * (1.0 + 1e-6)) rep.argmax_ok = false;
        }
    }

    // coincident arguments: phi1(a,a,t) = t e^{ta} peaks at exactly e^{-1}/|a|
    for (int c = 0; c < 100; ++c) {
        const double a = draw();
        const double cap = std::exp(-1.0) / std::abs(a);
        const double dt = 100.0 / std::abs(a) / nt;
        double sup = 0.0;
        for (int k = 0; k <= nt; ++k) sup = std::max(sup, phi1(a, a, k * dt));
        if (!(sup <= cap + 1e-12 && sup >= cap * (1.0 - 1e-3))) rep.degenerate_ok = false;
    }

    rep.pass = rep.violations == 0 && rep.argmax_ok && rep.degenerate_ok;
    rep.note = rep.pass ? "sampled divided differences stay within the reciprocal bound"
                        : "bound sweep found violations";
    return rep;
}

ComparisonReport compare_series(const ModelParams& params, const FirstOrderInit& init1,
                                const SimConfig& cfg, const EstimateSeries& series,
                                double threshold) {
    if (series.replicas < 2)
        throw std::invalid_argument("compare: need at least two replicas for standard errors");
    if (!init1.psi_plus.empty() || !init1.psi_minus.empty())
        throw std::invalid_argument("compare: analytic side assumes spatially constant initial data");

    ComparisonReport rep;
    rep.threshold = threshold;

    // Poisson initial pair state matching the simulator's sampler
    SecondOrderInit init2;
    init2.c_pp = init1.c_plus * init1.c_plus;
    init2.c_pm = init1.c_plus * init1.c_minus;
    init2.c_mm = init1.c_minus * init1.c_minus;

    double scale_min = params.kernel_minus.scale();
    if (params.lambda_plus > 0.0) scale_min = std::min(scale_min, params.kernel_plus.scale());
    if (params.lambda_cross > 0.0) scale_min = std::min(scale_min, params.kernel_cross.scale());
    RadialQuadrature rq(60.0 / scale_min, 384);
    const SymbolTable symq = build_symbols(params, rq.nodes());
    const std::size_t nq = rq.nodes().size();

    bool zero_se_gap = false;
    auto push = [&](double t, std::string obs, double analytic, double mc, double se) {
        ComparisonEntry e;
        e.t = t;
        e.observable = std::move(obs);
        e.analytic = analytic;
        e.mc = mc;
        e.se = se;
        const double diff = mc - analytic;
        if (se > 0.0) {
            e.z = diff / se;
        } else if (diff == 0.0) {
            e.z = 0.0;
        } else {
            e.z = (diff > 0.0 ? 1.0 : -1.0) * threshold * 1e6;
            zero_se_gap = true;
        }
        rep.max_abs_z = std::max(rep.max_abs_z, std::abs(e.z));
        if (std::abs(e.z) > threshold) rep.pass = false;
        rep.entries.push_back(std::move(e));
    };

    const double mup = params.mu_plus(), mum = params.mu_minus();
    for (const auto& st : series.snapshots) {
        const double t = st.t;
        const double km = init1.c_minus * std::exp(mum * t);
        const double kp =
            init1.c_plus * std::exp(mup * t) + params.lambda_cross * init1.c_minus * phi1(mup, mum, t);
        push(t, "density_minus", km, st.density_minus, st.density_minus_se);
        push(t, "density_plus", kp, st.density_plus, st.density_plus_se);

        const double cmm = pair_constant_mm(params, init2, t);
        const double cpm = pair_constant_pm(params, init2, t);
        const double cpp = pair_constant_pp(params, init2, t);
        std::vector<double> umm(nq), upm(nq), upp(nq);
        for (std::size_t j = 0; j < nq; ++j) {
            umm[j] = u_hat_mm(symq, init1.c_minus, t, j);
            upm[j] = u_hat_pm(symq, init1.c_minus, 0.0, t, j);
            upp[j] = u_hat_pp(symq, init1.c_plus, init1.c_minus, 0.0, 0.0, t, j);
        }
        for (std::size_t k = 0; k < series.bin_centers.size(); ++k) {
            const double r = series.bin_centers[k];
            char buf[64];
            std::snprintf(buf, sizeof(buf), "k_mm[r=%.4g]", r);
            push(t, buf, cmm + rq.inverse_at(umm, r, cfg.dim), st.k_mm[k], st.k_mm_se[k]);
            std::snprintf(buf, sizeof(buf), "k_pm[r=%.4g]", r);
            push(t, buf, cpm + rq.inverse_at(upm, r, cfg.dim), st.k_pm[k], st.k_pm_se[k]);
            std::snprintf(buf, sizeof(buf), "k_pp[r=%.4g]", r);
            push(t, buf, cpp + rq.inverse_at(upp, r, cfg.dim), st.k_pp[k], st.k_pp_se[k]);
        }
    }

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%zu comparisons at |z| <= %g; a union bound keeps the family false-alarm "
                  "rate below %.2g, so a pass means the data are consistent with the closed "
                  "forms, not a proof of them",
                  rep.entries.size(), threshold, static_cast<double>(rep.entries.size()) * 6.4e-5);
    rep.note = buf;
    if (zero_se_gap) rep.note += "; zero-variance entries with a nonzero gap were marked failing";
    if (series.status != "ok") rep.note = "simulation guard: " + series.status + "; " + rep.note;
    return rep;
}

ComparisonReport compare_sim_analytic(const ModelParams& params, const FirstOrderInit& init1,
                                      const SimConfig& cfg, double threshold, Backend backend) {
    const EstimateSeries series =
        run_replicas(params, init1.c_plus, init1.c_minus, cfg, backend);
    return compare_series(params, init1, cfg, series, threshold);
}

std::vector<double> build_majorant(const SymbolTable& sym, const std::vector<double>& b_field) {
    if (b_field.size() != sym.h2.size())
        throw std::invalid_argument("majorant: field size does not match symbol table");
    std::vector<double> m(b_field.size());
    const long long n = static_cast<long long>(m.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        const double den = sym.h4[i] * sym.h2[i];
        m[i] = den > 0.0 ? std::abs(b_field[i]) / den : kInf;
    }
    return m;
}

namespace {

struct ChannelMajorants {
    double mm = 0.0, pm = 0.0, pp = 0.0;
};

// per-index majorants of the three birth-source integrals; phimm/phipm are
// magnitudes of the initial fluctuation spectra (pass zero to restrict to the
// constant-driven part)
ChannelMajorants majorants_at(const SymbolTable& s, double cp, double cm, double phimm,
                              double phipm, std::size_t i) {
    const double lam = s.lambda_cross, lp = s.lambda_plus, lm = s.lambda_minus;
    const double mup = s.mu_plus, mum = s.mu_minus;
    const double fp2 = 2.0 * s.f_plus[i], fm2 = 2.0 * s.f_minus[i], h3 = s.h3[i];
    const double ap = std::abs(s.ahat_plus[i]);
    const double am = std::abs(s.ahat_minus[i]);
    const double ax = std::abs(s.ahat_cross[i]);
    ChannelMajorants m;
    m.mm = 2.0 * lm * cm * am * bound1(fm2, mum);
    m.pm = lam * ax *
           (cm * bound1(h3, mum) + phimm * bound1(h3, fm2) + 2.0 * lm * am * cm * bound2(h3, fm2, mum));
    m.pp = 2.0 * lp * ap * (cp * bound1(fp2, mup) + lam * cm * bound2(fp2, mum, mup)) +
           2.0 * lam * lam * ax * ax *
               (cm * bound2(fp2, h3, mum) + 2.0 * lm * am * cm * bound3(fp2, h3, fm2, mum)) +
           2.0 * lam * ax * phipm * bound1(fp2, h3) +
           2.0 * lam * lam * ax * ax * phimm * bound2(fp2, h3, fm2);
    return m;
}

double ratio_of(double u, double m) {
    if (std::isinf(m)) return 0.0;
    if (m > 0.0) return u / m;
    return u > 1e-300 ? kInf : 0.0;
}

}  // namespace

MajorantReport check_majorant(const ModelParams& params, const FirstOrderInit& init1,
                              const SecondOrderInit& init2, const FourierGrid& grid,
                              const std::vector<double>& times) {
    MajorantReport rep;
    const auto prob = SecondOrderProblem::prepare(params, init1, init2, grid);
    const SymbolTable& s = prob.sym;
    const double cp = init1.c_plus, cm = init1.c_minus;
    const long long m = static_cast<long long>(grid.size());

    rep.m_mm.resize(grid.size());
    rep.m_pm.resize(grid.size());
    rep.m_pp.resize(grid.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < m; ++i) {
        const auto ch = majorants_at(s, cp, cm, std::abs(prob.phi_mm_hat[i]),
                                     std::abs(prob.phi_pm_hat[i]), static_cast<std::size_t>(i));
        rep.m_mm[i] = ch.mm;
        rep.m_pm[i] = ch.pm;
        rep.m_pp[i] = ch.pp;
    }

    double maxr = 0.0;
    for (double t : times) {
#pragma omp parallel for schedule(static) reduction(max : maxr)
        for (long long i = 0; i < m; ++i) {
            if (grid.freq_norm(static_cast<std::size_t>(i)) == 0.0) continue;
            const std::size_t k = static_cast<std::size_t>(i);
            const double pmm = prob.phi_mm_hat[k].real();
            const double ppm = prob.phi_pm_hat[k].real();
            double r = ratio_of(std::abs(u_hat_mm(s, cm, t, k)), rep.m_mm[k]);
            r = std::max(r, ratio_of(std::abs(u_hat_pm(s, cm, pmm, t, k)), rep.m_pm[k]));
            r = std::max(r, ratio_of(std::abs(u_hat_pp(s, cp, cm, pmm, ppm, t, k)), rep.m_pp[k]));
            maxr = std::max(maxr, r);
        }
    }
    rep.max_ratio = maxr;
    rep.dominated = maxr <= 1.0 + 1e-9;

    if (s.mu_minus == 0.0) {
        // with the minus system critical, h4 h2 is itself bounded below by
        // -2 mu+ (1 - ahat-), which is what makes the generic majorant usable
        long long bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
        for (long long i = 0; i < m; ++i) {
            const double lhs = s.h4[i] * s.h2[i];
            const double rhs = -2.0 * s.mu_plus * (1.0 - s.ahat_minus[i]);
            if (lhs < rhs - 1e-12 * std::max(1.0, std::abs(rhs))) ++bad;
        }
        rep.case2_inequality_ok = bad == 0;
    } else {
        rep.note += "denominator inequality skipped (needs a critical minus system); ";
    }

    // lattice integrability of the phi-free part: refine dp by doubling both
    // n and the box, sum over p != 0
    const bool has_phi = !init2.phi_mm.empty() || !init2.phi_pm.empty() || !init2.phi_pp.empty();
    auto integral_on = [&](const FourierGrid& g, const SymbolTable& sg) {
        const long long gm = static_cast<long long>(g.size());
        std::vector<double> terms(g.size(), 0.0);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < gm; ++i) {
            if (g.freq_norm(static_cast<std::size_t>(i)) == 0.0) continue;
            const auto ch = majorants_at(sg, cp, cm, 0.0, 0.0, static_cast<std::size_t>(i));
            terms[i] = ch.mm + ch.pm + ch.pp;
        }
        double sum = 0.0;
        for (double v : terms) sum += v;
        return sum * g.freq_cell_volume();
    };
    double coarse = integral_on(grid, s);
    int n_fine = 2 * grid.n();
    double box_fine = 2.0 * grid.box_length();
    for (;;) {
        const FourierGrid fine(grid.dim(), n_fine, box_fine);
        const double value = integral_on(fine, build_symbols(params, fine));
        rep.integral_coarse = coarse;
        rep.integral_fine = value;
        rep.refinement_rel_change = std::abs(value - coarse) / std::max(coarse, 1e-300);
        if (rep.refinement_rel_change < 0.05 || 2 * n_fine > 256) break;
        coarse = value;
        n_fine *= 2;
        box_fine *= 2.0;
    }
    rep.integrable = rep.refinement_rel_change < 0.05;
    if (has_phi) rep.note += "refinement integral covers the constant-driven part only; ";
    rep.note += format_note("majorant integral %.6g -> %.6g under dp refinement",
                            rep.integral_coarse, rep.integral_fine);
    return rep;
}

}  // namespace contact
