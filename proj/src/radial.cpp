#include "contact/radial.hpp"

#include <cmath>
#include <stdexcept>

namespace contact {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sinc(double z) {
    if (std::abs(z) < 1e-4) {
        double z2 = z * z;
        return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
    }
    return std::sin(z) / z;
}

}  // namespace

RadialQuadrature::RadialQuadrature(double qmax, int panels) {
    static const double gl_x[8] = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static const double gl_w[8] = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    if (!(qmax > 0.0) || panels < 1) throw std::invalid_argument("radial quadrature: bad setup");
    double h = qmax / panels;
    q_.reserve(8 * panels);
    w_.reserve(8 * panels);
    for (int p = 0; p < panels; ++p) {
        double mid = (p + 0.5) * h;
        for (int g = 0; g < 8; ++g) {
            q_.push_back(mid + 0.5 * h * gl_x[g]);
            w_.push_back(0.5 * h * gl_w[g]);
        }
    }
}

double RadialQuadrature::inverse_at(const std::vector<double>& values, double r, int dim) const {
    if (values.size() != q_.size())
        throw std::invalid_argument("radial quadrature: sample count mismatch");
    double acc = 0.0;
    switch (dim) {
        case 1:
            for (std::size_t i = 0; i < q_.size(); ++i)
                acc += w_[i] * std::cos(q_[i] * r) * values[i];
            return acc / kPi;
        case 2:
            for (std::size_t i = 0; i < q_.size(); ++i)
                acc += w_[i] * q_[i] * std::cyl_bessel_j(0, q_[i] * r) * values[i];
            return acc / (2.0 * kPi);
        case 3:
            for (std::size_t i = 0; i < q_.size(); ++i)
                acc += w_[i] * q_[i] * q_[i] * sinc(q_[i] * r) * values[i];
            return acc / (2.0 * kPi * kPi);
        default:
            throw std::invalid_argument("radial quadrature: dim must be 1, 2 or 3");
    }
}

}  // namespace contact
