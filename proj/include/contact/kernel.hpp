#pragma once

#include <array>
#include <random>
#include <string>

namespace contact {

enum class KernelFamily { gaussian, tent };

// Dispersal kernel: an even probability density on R^d together with its
// Fourier transform and an exact sampler.  Gaussian has scale sigma, tent is
// the radially linear bump of compact support [0, radius].  The amplitude
// factor rescales the density and exists only so tests can construct
// deliberately unnormalized doubles; production code leaves it at 1.
class Kernel {
public:
    Kernel(KernelFamily family, double scale, int dim);
    static Kernel with_amplitude(KernelFamily family, double scale, int dim, double amplitude);

    KernelFamily family() const { return family_; }
    double scale() const { return scale_; }
    int dim() const { return dim_; }
    double amplitude() const { return amplitude_; }

    // density a(x) evaluated at radius s = |x| >= 0
    double density_radial(double s) const;
    double density(const std::array<double, 3>& x) const;

    // Fourier transform ahat(p) at radius q = |p|; real and even by symmetry
    double fourier_radial(double q) const;
    double fourier(const std::array<double, 3>& p) const;

    double second_moment() const;

    // radius beyond which the density is negligible (exact support for tent)
    double support_radius() const;

    // draw a displacement from the density (exact, no rejection)
    std::array<double, 3> sample(std::mt19937_64& rng) const;

    std::string describe() const;

private:
    KernelFamily family_;
    double scale_;
    int dim_;
    double amplitude_;
};

}  // namespace contact
