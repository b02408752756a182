#include "contact/phi.hpp"

#include <algorithm>
#include <cmath>

namespace contact {

namespace {

// First divided difference of exp over nonpositive arguments u >= v
// (already multiplied by t).  Both exponentials are <= 1, so nothing
// overflows and expm1 removes the cancellation for small gaps.
double dd1_exp(double u, double v) {
    double gap = u - v;
    if (gap == 0.0) return std::exp(u);
    return std::exp(u) * (-std::expm1(-gap)) / gap;
}

// dd of exp over {0, w1, w2}, 0 >= w1 >= w2, spread > cluster threshold.
double dd2_exp_spread(double w1, double w2) {
    return (dd1_exp(0.0, w1) - dd1_exp(w1, w2)) / (-w2);
}

// Series sum_m h_m(w...) / (m+k)! where h_m is the complete homogeneous
// symmetric polynomial; valid for clustered arguments (|w| <= ~1).
template <int K, int NW>
double dd_exp_series(const double (&w)[NW]) {
    double factorial = 1.0;
    for (int j = 2; j <= K; ++j) factorial *= j;
    // h_m for the active variables, built recursively:
    // h_m(w1..wk) = w1*h_{m-1}(w1..wk) + h_m(w2..wk)
    double sum = 0.0;
    double tail_pow = 1.0;  // w[NW-1]^m
    double h_prev[NW];
    for (int i = 0; i < NW; ++i) h_prev[i] = 1.0;  // h_0 = 1 for every suffix
    sum = 1.0 / factorial;
    for (int m = 1; m <= 48; ++m) {
        factorial *= (m + K);
        tail_pow *= w[NW - 1];
        double h = tail_pow;
        double h_cur[NW];
        h_cur[NW - 1] = h;
        for (int i = NW - 2; i >= 0; --i) {
            h = w[i] * h_prev[i] + h;
            h_cur[i] = h;
        }
        for (int i = 0; i < NW; ++i) h_prev[i] = h_cur[i];
        double term = h_cur[0] / factorial;
        sum += term;
        if (std::abs(term) < 1e-20 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

}  // namespace

double phi1(double a, double b, double t, const SingularSetPolicy& policy) {
    if (t == 0.0) return 0.0;
    if (a < b) std::swap(a, b);
    double delta = a - b;
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (delta > policy.epsilon_dd * scale) {
        // exact formula, arranged so the smaller exponential carries the
        // expm1 factor: (e^{ta} - e^{tb})/(a-b) = e^{ta}(1 - e^{-t d})/d
        return std::exp(t * a) * (-std::expm1(-t * delta)) / delta;
    }
    double z = t * delta;
    return t * std::exp(t * b) * (1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z / 24.0)));
}

double phi2(double a, double b, double c, double t, const SingularSetPolicy& policy) {
    (void)policy;
    if (t == 0.0) return 0.0;
    double z[3] = {t * a, t * b, t * c};
    std::sort(z, z + 3, std::greater<double>());
    double shift = z[0];
    double w1 = z[1] - shift, w2 = z[2] - shift;
    double core;
    if (-w2 <= 1.0) {
        double w[2] = {w1, w2};
        core = dd_exp_series<2>(w);
    } else {
        core = dd2_exp_spread(w1, w2);
    }
    return t * t * std::exp(shift) * core;
}

double phi3(double a, double b, double c, double d, double t, const SingularSetPolicy& policy) {
    (void)policy;
    if (t == 0.0) return 0.0;
    double z[4] = {t * a, t * b, t * c, t * d};
    std::sort(z, z + 4, std::greater<double>());
    double shift = z[0];
    double w1 = z[1] - shift, w2 = z[2] - shift, w3 = z[3] - shift;
    double core;
    if (-w3 <= 1.0) {
        double w[3] = {w1, w2, w3};
        core = dd_exp_series<3>(w);
    } else {
        // dd over {0,w1,w2,w3} = (dd{0,w1,w2} - dd{w1,w2,w3}) / (0 - w3)
        double upper;
        if (-w2 <= 1.0) {
            double w[2] = {w1, w2};
            upper = dd_exp_series<2>(w);
        } else {
            upper = dd2_exp_spread(w1, w2);
        }
        double lower;
        if (w1 - w3 <= 1.0) {
            double w[2] = {w2 - w1, w3 - w1};
            lower = std::exp(w1) * dd_exp_series<2>(w);
        } else {
            lower = std::exp(w1) * dd2_exp_spread(w2 - w1, w3 - w1);
        }
        core = (upper - lower) / (-w3);
    }
    return t * t * t * std::exp(shift) * core;
}

}  // namespace contact
