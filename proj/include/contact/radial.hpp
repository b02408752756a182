#pragma once

#include <vector>

namespace contact {

// Gauss-Legendre nodes on [0, qmax] for inverting radial Fourier profiles:
// given samples v_i = vhat(q_i) of an even spectrum, inverse_at returns
//   (2pi)^{-d} int e^{i p.x} vhat(|p|) dp   at |x| = r
// via the dimension-appropriate kernel (cos, J0, or sin(qr)/(qr)).
class RadialQuadrature {
public:
    RadialQuadrature(double qmax, int panels);

    const std::vector<double>& nodes() const { return q_; }

    double inverse_at(const std::vector<double>& values, double r, int dim) const;

private:
    std::vector<double> q_, w_;
};

}  // namespace contact
