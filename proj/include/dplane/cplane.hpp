#pragma once

#include <complex>
#include <functional>
#include <variant>
#include <vector>

namespace dplane {

using Complex = std::complex<double>;

// Elliptic counterparts of the hyperbolic catalog.
struct CSource {
    double q = 1.0;
};
// Dual of the source: potential i * (-q ln z), strength B = i E.
struct CVortex {
    double q = 1.0;
};
// Complex charge q - i m.
struct CVortexSource {
    double q = 1.0;
    double m = 0.0;
};
// Potential (-1)^(n+1) Q / z^n with Q = pe - i pm.
struct CMultipole {
    int n = 1;
    double pe = 1.0;
    double pm = 0.0;
};
// Potential i E0 (z + R^2 / z).
struct CCylinder {
    double e0 = 1.0;
    double R = 1.0;
};

using CKind = std::variant<CSource, CVortex, CVortexSource, CMultipole, CCylinder>;
using CField = std::function<Complex(Complex)>;

Complex cpotential(const CKind& kind, Complex z);
// E = -conj(F'(z)); for CVortex the source's dual field i E.
Complex cstrength(const CKind& kind, Complex z);
// B = i E.
Complex cdual(const CKind& kind, Complex z);

struct CFlux {
    double gamma = 0.0;  // circulation
    double pi = 0.0;     // flux
};

// Periodic trapezoid rule for the integral of E dz-bar = Gamma - i Pi over a
// circle centred at the origin.
CFlux circulation_flux(const CKind& kind, double circle_radius, int samples);
CFlux circulation_flux(const CField& field, double circle_radius, int samples);

// Integral of z^m dz over the unit circle.
Complex unit_circle_power_integral(int m, int samples);

// Normalized by max(1, |grad F|).
double ccr_residual(const CKind& kind, Complex z, double step);
double claplace_residual(const CKind& kind, Complex z, double step);

// RK4 on E/|E| with the step capped at 0.02 |z|; stops at arc length max_len or
// when |z| leaves [r_min, r_max].
std::vector<Complex> trace_cfield_line(const CKind& kind, Complex seed, double ds, double max_len,
                                       double r_min = 1e-3, double r_max = 1e3);

}  // namespace dplane
