#pragma once

namespace contact {

// Tolerance for deciding when exponents are numerically coincident.  Degenerate
// divided differences switch to a series branch below this threshold.
struct SingularSetPolicy {
    double epsilon_dd = 1e-7;
};

// First divided difference of x -> exp(t*x):
//   phi1(a,b,t) = (e^{ta} - e^{tb}) / (a - b),  phi1(a,a,t) = t e^{ta}.
// Equals the convolution integral of the two semigroups,
//   int_0^t e^{a(t-s)} e^{bs} ds,
// which is how it enters every closed-form solution here.  Symmetric in (a,b)
// bit-for-bit, nonnegative for t >= 0, and zero at t = 0.
double phi1(double a, double b, double t, const SingularSetPolicy& policy = {});

// Second divided difference of x -> exp(t*x) over {a,b,c}:
//   phi2(a,b,c,t) = int_0^t e^{a(t-s)} phi1(b,c,s) ds,
// fully symmetric, continuous across every coincidence pattern
// (a=b, b=c, a=c, a=b=c); phi2(a,a,a,t) = t^2 e^{ta} / 2.
double phi2(double a, double b, double c, double t, const SingularSetPolicy& policy = {});

// Third divided difference over {a,b,c,d}:
//   phi3(a,b,c,d,t) = int_0^t e^{a(t-s)} phi2(b,c,d,s) ds,
// needed for the triply nested birth integrals; phi3(a,a,a,a,t) = t^3 e^{ta} / 6.
double phi3(double a, double b, double c, double d, double t, const SingularSetPolicy& policy = {});

}  // namespace contact
