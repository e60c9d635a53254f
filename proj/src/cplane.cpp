#include "dplane/cplane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

constexpr Complex I{0.0, 1.0};

void require_nonzero(Complex z) {
    if (z == Complex{}) throw ZeroInput("complex potential undefined at z = 0");
}

// Potential -c ln z and derivative -c / z.
bool log_coefficient(const CKind& kind, Complex& c) {
    if (auto* s = std::get_if<CSource>(&kind)) c = s->q;
    else if (auto* v = std::get_if<CVortex>(&kind)) c = I * v->q;
    else if (auto* vs = std::get_if<CVortexSource>(&kind)) c = Complex{vs->q, -vs->m};
    else return false;
    return true;
}

Complex cderivative(const CKind& kind, Complex z) {
    require_nonzero(z);
    Complex c;
    if (log_coefficient(kind, c)) return -c / z;
    if (auto* mp = std::get_if<CMultipole>(&kind)) {
        Complex Q{mp->pe, -mp->pm};
        double sgn = (mp->n % 2 == 0) ? 1.0 : -1.0;
        return sgn * static_cast<double>(mp->n) * Q * std::pow(z, -mp->n - 1);
    }
    const auto& cy = std::get<CCylinder>(kind);
    return I * cy.e0 * (1.0 - cy.R * cy.R / (z * z));
}

struct Partials {
    double ux, uy, vx, vy;
};

Partials partials(const CKind& kind, Complex z, double s) {
    Complex fx = (cpotential(kind, z + s) - cpotential(kind, z - s)) / (2 * s);
    Complex fy = (cpotential(kind, z + I * s) - cpotential(kind, z - I * s)) / (2 * s);
    return {fx.real(), fy.real(), fx.imag(), fy.imag()};
}

double grad_scale(const Partials& p) {
    return std::max({1.0, std::fabs(p.ux), std::fabs(p.uy), std::fabs(p.vx), std::fabs(p.vy)});
}

}  // namespace

Complex cpotential(const CKind& kind, Complex z) {
    require_nonzero(z);
    Complex c;
    if (log_coefficient(kind, c)) return -c * std::log(z);
    if (auto* mp = std::get_if<CMultipole>(&kind)) {
        if (mp->n < 1) throw DomainError("multipole order must be at least 1");
        Complex Q{mp->pe, -mp->pm};
        double sgn = (mp->n % 2 == 1) ? 1.0 : -1.0;
        return sgn * Q * std::pow(z, -mp->n);
    }
    const auto& cy = std::get<CCylinder>(kind);
    return I * cy.e0 * (z + cy.R * cy.R / z);
}

Complex cstrength(const CKind& kind, Complex z) {
    // the dual field B = i E of the source, not -conj of the rotated potential's derivative
    if (auto* v = std::get_if<CVortex>(&kind)) return I * cstrength(CSource{v->q}, z);
    return -std::conj(cderivative(kind, z));
}

Complex cdual(const CKind& kind, Complex z) { return I * cstrength(kind, z); }

CFlux circulation_flux(const CKind& kind, double circle_radius, int samples) {
    return circulation_flux([&kind](Complex z) { return cstrength(kind, z); }, circle_radius, samples);
}

CFlux circulation_flux(const CField& field, double circle_radius, int samples) {
    if (samples < 1 || !(circle_radius > 0)) throw DomainError("need a positive radius and sample count");
    // periodic integrand: the trapezoid rule converges geometrically
    Complex sum;
    const double dphi = 2 * std::numbers::pi / samples;
    for (int k = 0; k < samples; ++k) {
        double phi = k * dphi;
        Complex z = std::polar(circle_radius, phi);
        Complex dzbar = std::conj(I * z) * dphi;
        sum += field(z) * dzbar;
    }
    return {sum.real(), -sum.imag()};
}

Complex unit_circle_power_integral(int m, int samples) {
    Complex sum;
    const double dphi = 2 * std::numbers::pi / samples;
    for (int k = 0; k < samples; ++k) {
        Complex z = std::polar(1.0, k * dphi);
        sum += std::pow(z, m) * I * z * dphi;
    }
    return sum;
}

double ccr_residual(const CKind& kind, Complex z, double step) {
    Partials p = partials(kind, z, step);
    return std::max(std::fabs(p.ux - p.vy), std::fabs(p.uy + p.vx)) / grad_scale(p);
}

double claplace_residual(const CKind& kind, Complex z, double step) {
    Complex lap = (cpotential(kind, z + step) + cpotential(kind, z - step) + cpotential(kind, z + I * step) +
                   cpotential(kind, z - I * step) - 4.0 * cpotential(kind, z)) /
                  (step * step);
    return std::max(std::fabs(lap.real()), std::fabs(lap.imag())) / grad_scale(partials(kind, z, step));
}

std::vector<Complex> trace_cfield_line(const CKind& kind, Complex seed, double ds, double max_len, double r_min,
                                       double r_max) {
    auto dir = [&](Complex z) {
        Complex e = cstrength(kind, z);
        return e / std::abs(e);
    };
    std::vector<Complex> pts{seed};
    Complex z = seed;
    // steps shrink near the pole, where the direction turns on the scale |z|
    const long max_iter = 100 * std::lround(max_len / ds) + 1;
    double arc = 0.0;
    for (long k = 0; k < max_iter && arc < max_len - 1e-6 * ds; ++k) {
        double h = std::min({ds, 0.02 * std::abs(z), max_len - arc});
        Complex k1 = dir(z), k2 = dir(z + 0.5 * h * k1), k3 = dir(z + 0.5 * h * k2), k4 = dir(z + h * k3);
        Complex next = z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        double r = std::abs(next);
        if (!(r >= r_min && r <= r_max)) break;
        z = next;
        arc += h;
        pts.push_back(z);
    }
    return pts;
}

}  // namespace dplane
