#include "contact/model.hpp"

#include <cmath>

namespace contact {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sphere_surface(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return 2.0 * kPi;
        default: return 4.0 * kPi;
    }
}

// radial quadrature of s^{d-1} f(s) over [0, cutoff], 64-point Gauss-Legendre
// per panel; used for the normalization and integrability checks
double radial_integral(const Kernel& k, int npanels, double cutoff,
                       double (*weight)(const Kernel&, double)) {
    static const double gl_x[8] = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static const double gl_w[8] = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    double h = cutoff / npanels;
    double acc = 0.0;
    for (int pnl = 0; pnl < npanels; ++pnl) {
        double mid = (pnl + 0.5) * h;
        for (int g = 0; g < 8; ++g) {
            double s = mid + 0.5 * h * gl_x[g];
            acc += 0.5 * h * gl_w[g] * std::pow(s, k.dim() - 1) * weight(k, s);
        }
    }
    return sphere_surface(k.dim()) * acc;
}

}  // namespace

double kernel_mass(const Kernel& kernel) {
    return radial_integral(kernel, 64, kernel.support_radius(),
                           [](const Kernel& k, double s) { return k.density_radial(s); });
}

DecayWitness kernel_decay_witness(const Kernel& kernel, double delta) {
    DecayWitness w;
    w.delta = delta;
    double cutoff = kernel.support_radius();
    int samples = 4096;
    for (int i = 0; i <= samples; ++i) {
        double s = cutoff * i / samples;
        double v = kernel.density_radial(s) * std::pow(1.0 + s, delta);
        if (v > w.constant) w.constant = v;
    }
    return w;
}

std::vector<std::string> validate_kernel(const Kernel& kernel, const std::string& label,
                                         double decay_exponent) {
    std::vector<std::string> out;
    double mass = kernel_mass(kernel);
    if (std::abs(mass - 1.0) > 1e-10) out.push_back(label + ": normalization");

    // |ahat| <= 1 and ahat(0) = 1, sampled over a wide frequency range
    if (std::abs(kernel.fourier_radial(0.0) - 1.0) > 1e-12) out.push_back(label + ": fourier at zero");
    double qmax = 40.0 / kernel.scale();
    bool bounded = true;
    for (int i = 0; i <= 2000; ++i) {
        double q = qmax * i / 2000.0;
        if (std::abs(kernel.fourier_radial(q)) > 1.0 + 1e-10) bounded = false;
    }
    if (!bounded) out.push_back(label + ": fourier bound");

    // integrability of ahat (finite radial integral of |ahat|)
    double hat_mass = radial_integral(kernel, 256, qmax, [](const Kernel& k, double q) {
        return std::abs(k.fourier_radial(q));
    });
    if (!std::isfinite(hat_mass)) out.push_back(label + ": fourier integrability");

    double delta = decay_exponent > 0.0 ? decay_exponent : 2.0 * kernel.dim() + 1.0;
    DecayWitness w = kernel_decay_witness(kernel, delta);
    if (!std::isfinite(w.constant)) out.push_back(label + ": decay bound");
    return out;
}

std::vector<std::string> validate_params(const ModelParams& params) {
    std::vector<std::string> out;
    if (!(params.lambda_plus >= 0.0)) out.push_back("lambda_plus: nonnegativity");
    if (!(params.lambda_minus >= 0.0)) out.push_back("lambda_minus: nonnegativity");
    if (!(params.lambda_cross >= 0.0)) out.push_back("lambda_cross: nonnegativity");
    if (params.dim < 1 || params.dim > 3) out.push_back("dim: range");
    for (const auto* entry : {&params.kernel_plus, &params.kernel_minus, &params.kernel_cross}) {
        if (entry->dim() != params.dim) {
            out.push_back("kernel dimension mismatch");
            break;
        }
    }
    auto merge = [&out](std::vector<std::string> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    merge(validate_kernel(params.kernel_plus, "kernel_plus"));
    merge(validate_kernel(params.kernel_minus, "kernel_minus"));
    merge(validate_kernel(params.kernel_cross, "kernel_cross"));
    return out;
}

std::vector<std::string> validate_first_order(const FirstOrderInit& init, const FourierGrid& grid) {
    std::vector<std::string> out;
    if (!(init.c_plus >= 0.0)) out.push_back("c_plus: nonnegativity");
    if (!(init.c_minus > 0.0)) out.push_back("c_minus: positivity");
    if (!(init.alpha_minus > 0.0)) out.push_back("alpha_minus: positivity");
    for (const auto* f : {&init.psi_plus, &init.psi_minus}) {
        if (!f->empty() && f->size() != grid.size()) {
            out.push_back("fluctuation field size mismatch");
            return out;
        }
    }
    if (!init.psi_minus.empty()) {
        for (double v : init.psi_minus)
            if (init.c_minus + v < init.alpha_minus) {
                out.push_back("minus density lower bound");
                break;
            }
    } else if (init.c_minus < init.alpha_minus) {
        out.push_back("minus density lower bound");
    }
    if (!init.psi_plus.empty()) {
        for (double v : init.psi_plus)
            if (init.c_plus + v < 0.0) {
                out.push_back("plus density nonnegativity");
                break;
            }
    }
    return out;
}

std::vector<std::string> validate_second_order(const SecondOrderInit& init, const FourierGrid& grid,
                                               const FirstOrderInit* init1) {
    std::vector<std::string> out;
    if (!(init.c_pp >= 0.0)) out.push_back("c_pp: nonnegativity");
    if (!(init.c_pm >= 0.0)) out.push_back("c_pm: nonnegativity");
    if (!(init.c_mm > 0.0)) out.push_back("c_mm: positivity");
    struct Entry {
        const std::vector<double>* f;
        double c;
        const char* name;
    };
    for (auto [f, c, name] : {Entry{&init.phi_pp, init.c_pp, "phi_pp"},
                              Entry{&init.phi_pm, init.c_pm, "phi_pm"},
                              Entry{&init.phi_mm, init.c_mm, "phi_mm"}}) {
        if (f->empty()) continue;
        if (f->size() != grid.size()) {
            out.push_back(std::string(name) + ": size mismatch");
            continue;
        }
        bool even = true, nonneg = true;
        for (std::size_t i = 0; i < f->size(); ++i) {
            if (std::abs((*f)[i] - (*f)[grid.mirror(i)]) > 1e-12) even = false;
            if (c + (*f)[i] < 0.0) nonneg = false;
        }
        if (!even) out.push_back(std::string(name) + ": evenness");
        if (!nonneg) out.push_back(std::string(name) + ": pair density nonnegativity");
    }
    if (init.translation_invariant && init1 != nullptr) {
        auto zero = [](const std::vector<double>& f) {
            for (double v : f)
                if (v != 0.0) return false;
            return true;
        };
        if (!zero(init1->psi_plus) || !zero(init1->psi_minus))
            out.push_back("translation invariance requires zero first-order fluctuations");
    }
    return out;
}

ModelParams make_params(double lambda_plus, double lambda_minus, double lambda_cross,
                        const Kernel& kp, const Kernel& km, const Kernel& kx) {
    ModelParams p{lambda_plus, lambda_minus, lambda_cross, kp, km, kx, kp.dim()};
    return p;
}

}  // namespace contact
