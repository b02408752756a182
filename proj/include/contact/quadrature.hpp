#pragma once

namespace contact {

// Composite 8-point Gauss-Legendre over [a, b] split into equal panels.
template <class F>
double integrate_panels(F&& f, double a, double b, int panels) {
    static const double gl_x[8] = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static const double gl_w[8] = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    double h = (b - a) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double mid = a + (p + 0.5) * h;
        for (int g = 0; g < 8; ++g) acc += 0.5 * h * gl_w[g] * f(mid + 0.5 * h * gl_x[g]);
    }
    return acc;
}

}  // namespace contact
