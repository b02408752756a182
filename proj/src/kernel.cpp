#include "contact/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

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

// sin(z)/z with a series branch near zero
double sinc(double z) {
    if (std::abs(z) < 1e-4) {
        double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

// tent transform in d=3: 12 (2 - 2 cos z - z sin z) / z^4 at z = q r
double tent_hat_3d(double z) {
    z = std::abs(z);
    if (z < 0.5) {
        double z2 = z * z;
        return 1.0 + z2 * (-1.0 / 15.0 + z2 * (1.0 / 560.0 + z2 * (-1.0 / 37800.0 + z2 / 3991680.0)));
    }
    double z2 = z * z;
    return 12.0 * (2.0 - 2.0 * std::cos(z) - z * std::sin(z)) / (z2 * z2);
}

// tent transform in d=2 via the radial Bessel integral, composite
// Gauss-Legendre; the integrand is smooth so a node count tied to the
// number of oscillations gives near machine accuracy
double tent_hat_2d(double q, double r) {
    static const double gl_x[8] = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static const double gl_w[8] = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    double norm = 3.0 / (kPi * r * r);
    int panels = 4 + static_cast<int>(std::abs(q) * r / 2.0);
    double h = r / panels;
    double acc = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
        double mid = (pnl + 0.5) * h;
        for (int g = 0; g < 8; ++g) {
            double s = mid + 0.5 * h * gl_x[g];
            acc += 0.5 * h * gl_w[g] * std::cyl_bessel_j(0.0, q * s) * (1.0 - s / r) * s;
        }
    }
    return 2.0 * kPi * norm * acc;
}

}  // namespace

Kernel::Kernel(KernelFamily family, double scale, int dim)
    : family_(family), scale_(scale), dim_(dim), amplitude_(1.0) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("kernel: dim must be 1, 2 or 3");
    if (!(scale > 0.0)) throw std::invalid_argument("kernel: scale must be positive");
}

Kernel Kernel::with_amplitude(KernelFamily family, double scale, int dim, double amplitude) {
    Kernel k(family, scale, dim);
    k.amplitude_ = amplitude;
    return k;
}

double Kernel::density_radial(double s) const {
    s = std::abs(s);
    if (family_ == KernelFamily::gaussian) {
        double sig2 = scale_ * scale_;
        double norm = std::pow(2.0 * kPi * sig2, -0.5 * dim_);
        return amplitude_ * norm * std::exp(-0.5 * s * s / sig2);
    }
    if (s >= scale_) return 0.0;
    double cd = dim_ * (dim_ + 1) / (sphere_surface(dim_) * std::pow(scale_, dim_));
    return amplitude_ * cd * (1.0 - s / scale_);
}

double Kernel::density(const std::array<double, 3>& x) const {
    double s2 = 0.0;
    for (int a = 0; a < dim_; ++a) s2 += x[a] * x[a];
    return density_radial(std::sqrt(s2));
}

double Kernel::fourier_radial(double q) const {
    if (family_ == KernelFamily::gaussian) {
        return amplitude_ * std::exp(-0.5 * scale_ * scale_ * q * q);
    }
    switch (dim_) {
        case 1: {
            double z = 0.5 * q * scale_;
            double s = sinc(z);
            return amplitude_ * s * s;
        }
        case 2: return amplitude_ * tent_hat_2d(q, scale_);
        default: return amplitude_ * tent_hat_3d(q * scale_);
    }
}

double Kernel::fourier(const std::array<double, 3>& p) const {
    double q2 = 0.0;
    for (int a = 0; a < dim_; ++a) q2 += p[a] * p[a];
    return fourier_radial(std::sqrt(q2));
}

double Kernel::second_moment() const {
    if (family_ == KernelFamily::gaussian) return amplitude_ * dim_ * scale_ * scale_;
    double d = dim_;
    return amplitude_ * d * (d + 1.0) * scale_ * scale_ / ((d + 2.0) * (d + 3.0));
}

double Kernel::support_radius() const {
    if (family_ == KernelFamily::gaussian) return 12.0 * scale_;
    return scale_;
}

std::array<double, 3> Kernel::sample(std::mt19937_64& rng) const {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    if (family_ == KernelFamily::gaussian) {
        std::normal_distribution<double> normal(0.0, scale_);
        for (int a = 0; a < dim_; ++a) x[a] = normal(rng);
        return x;
    }
    // radius: scale * Beta(d, 2), realized as the d-th smallest of d+1 uniforms
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u[4];
    for (int i = 0; i < dim_ + 1; ++i) u[i] = unif(rng);
    std::sort(u, u + dim_ + 1);
    double s = scale_ * u[dim_ - 1];
    switch (dim_) {
        case 1:
            x[0] = (unif(rng) < 0.5) ? -s : s;
            break;
        case 2: {
            double ang = 2.0 * kPi * unif(rng);
            x[0] = s * std::cos(ang);
            x[1] = s * std::sin(ang);
            break;
        }
        default: {
            double cz = 2.0 * unif(rng) - 1.0;
            double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
            double ang = 2.0 * kPi * unif(rng);
            x[0] = s * sz * std::cos(ang);
            x[1] = s * sz * std::sin(ang);
            x[2] = s * cz;
            break;
        }
    }
    return x;
}

std::string Kernel::describe() const {
    std::string name = family_ == KernelFamily::gaussian ? "gaussian" : "tent";
    return name + "(" + std::to_string(scale_) + ", d=" + std::to_string(dim_) + ")";
}

}  // namespace contact
