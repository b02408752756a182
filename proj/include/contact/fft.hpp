#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "contact/grid.hpp"

namespace contact {

using cvector = std::vector<std::complex<double>>;

// Discrete stand-ins for the continuum Fourier pair
//   fhat(p) = int e^{-i p.x} f(x) dx,   f(x) = (2pi)^{-d} int e^{+i p.x} fhat(p) dp,
// realized as dx^d * DFT and L^{-d} * inverse DFT on the wrap-around lattice.
// Round trip is exact up to floating point error.
class FourierTransformer {
public:
    explicit FourierTransformer(const FourierGrid& grid);
    ~FourierTransformer();
    FourierTransformer(const FourierTransformer&) = delete;
    FourierTransformer& operator=(const FourierTransformer&) = delete;

    cvector forward(const cvector& space) const;
    cvector inverse(const cvector& freq) const;

    // space side given as real samples on the lattice
    cvector forward_real(const std::vector<double>& space) const;
    std::vector<double> inverse_real_part(const cvector& freq) const;

    const FourierGrid& grid() const { return grid_; }

private:
    FourierGrid grid_;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

// O(n^2) reference transform with the same convention, for validating the
// fast path in tests.
cvector reference_forward(const FourierGrid& grid, const cvector& space);
cvector reference_inverse(const FourierGrid& grid, const cvector& freq);

}  // namespace contact
