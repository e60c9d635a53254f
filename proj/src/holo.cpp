#include "dplane/holo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double scale_of(const Double& h) { return std::max({1.0, std::fabs(h.t), std::fabs(h.x)}); }

void require_stencil(const HFunction& f, const Double& h, double reach) {
    Isotropic q = to_isotropic(h);
    // distance to the cone lines through the origin is |xi_i| / sqrt(2)
    if (std::min(std::fabs(q.xi1), std::fabs(q.xi2)) <= 2.0 * std::sqrt(2.0) * reach)
        throw DomainError("stencil of " + f.name + " touches the light cone");
    if (!f.domain) return;
    const Double probes[] = {h, h + Double{reach, 0}, h - Double{reach, 0}, h + Double{0, reach},
                             h - Double{0, reach}};
    for (const Double& p : probes)
        if (!f.domain(p)) throw DomainError("stencil of " + f.name + " leaves its domain");
}

double grad_scale(const Jet& j) {
    return std::max({1.0, std::fabs(j.d_t.t), std::fabs(j.d_t.x), std::fabs(j.d_x.t),
                     std::fabs(j.d_x.x)});
}

Jet jet_unchecked(const HFunction& f, const Double& h, double s) {
    Jet j;
    j.value = f(h);
    j.d_t = (f(h + Double{s, 0}) - f(h - Double{s, 0})) / (2 * s);
    j.d_x = (f(h + Double{0, s}) - f(h - Double{0, s})) / (2 * s);
    return j;
}

Double box_unchecked(const HFunction& f, const Double& h, double s) {
    // the centre terms of the two second differences cancel
    Double sum = f(h + Double{s, 0}) + f(h - Double{s, 0}) - f(h + Double{0, s}) - f(h - Double{0, s});
    return sum / (s * s);
}

}  // namespace

double default_step(const Double& h) { return std::cbrt(kEps) * scale_of(h); }
double default_step2(const Double& h) { return std::pow(kEps, 0.25) * scale_of(h); }

Jet make_jet(const HFunction& f, const Double& h, double step) {
    double s = step > 0 ? step : default_step(h);
    require_stencil(f, h, s);
    return jet_unchecked(f, h, s);
}

Wirtinger wirtinger(const Jet& jet) {
    Double jdx = j_unit * jet.d_x;
    return {0.5 * (jet.d_t + jdx), 0.5 * (jet.d_t - jdx)};
}

double cr_residual(const HFunction& f, const Double& h, double step) {
    Jet j = make_jet(f, h, step);
    double r = std::max(std::fabs(j.d_t.t - j.d_x.x), std::fabs(j.d_x.t - j.d_t.x));
    return r / grad_scale(j);
}

Double box(const HFunction& f, const Double& h, double step) {
    double s = step > 0 ? step : default_step2(h);
    require_stencil(f, h, s);
    return box_unchecked(f, h, s);
}

double wave_residual(const HFunction& f, const Double& h, double step) {
    double s = step > 0 ? step : default_step2(h);
    require_stencil(f, h, s);
    Double b = box_unchecked(f, h, s);
    Jet j = jet_unchecked(f, h, s);
    return std::max(std::fabs(b.t), std::fabs(b.x)) / grad_scale(j);
}

double conformal_factor(const HFunction& f, const Double& h) {
    Double d = f.has_deriv() ? f.deriv(h) : wirtinger(make_jet(f, h)).d_h;
    return norm_sq(d);
}

double jacobian_det(const HFunction& f, const Double& h, double step) {
    Jet j = make_jet(f, h, step);
    return j.d_t.t * j.d_x.x - j.d_x.t * j.d_t.x;
}

double level_orthogonality(const HFunction& f, const Double& h, double step) {
    Jet j = make_jet(f, h, step);
    return j.d_t.t * j.d_t.x - j.d_x.t * j.d_x.x;
}

IsotropicMap conformal_isotropic(const RealMap& f1, const RealMap& f2, std::string name) {
    IsotropicMap out;
    out.map.name = std::move(name);
    out.map.eval = [f1, f2](const Double& h) {
        Isotropic q = to_isotropic(h);
        return from_isotropic({f1.f(q.xi1), f2.f(q.xi2)});
    };
    auto slope = [](const RealMap& m, double u) {
        if (m.df) return m.df(u);
        double s = std::cbrt(kEps) * std::max(1.0, std::fabs(u));
        return (m.f(u + s) - m.f(u - s)) / (2 * s);
    };
    out.factor = [f1, f2, slope](const Double& h) {
        Isotropic q = to_isotropic(h);
        return slope(f1, q.xi1) * slope(f2, q.xi2);
    };
    return out;
}

Double klein_gordon_residual(const HFunction& f, double mu, const DMap& source, const Double& h,
                             double step) {
    Double r = box(f, h, step) + mu * mu * f(h);
    if (source) r += source(h);
    return r;
}

HFunction compose(const HFunction& f, const HFunction& g) {
    HFunction c;
    c.name = f.name + "(" + g.name + ")";
    c.eval = [f, g](const Double& h) { return f(g(h)); };
    if (f.has_deriv() && g.has_deriv())
        c.deriv = [f, g](const Double& h) { return f.deriv(g(h)) * g.deriv(h); };
    c.domain = [f, g](const Double& h) { return g.contains(h) && f.contains(g(h)); };
    return c;
}

HFunction power_function(int n) {
    HFunction f;
    f.name = "h^" + std::to_string(n);
    f.eval = [n](const Double& h) { return pow_int(h, n); };
    f.deriv = [n](const Double& h) { return n == 0 ? Double{} : n * pow_int(h, n - 1); };
    if (n < 0) f.domain = [](const Double& h) { return !on_cone(h); };
    return f;
}

HFunction exp_function() {
    HFunction f;
    f.name = "exp";
    f.eval = [](const Double& h) { return exp(h); };
    f.deriv = f.eval;
    return f;
}

HFunction ln_function() {
    HFunction f;
    f.name = "ln";
    f.eval = [](const Double& h) { return ln(h); };
    f.deriv = [](const Double& h) { return Double{1.0} / h; };
    f.domain = [](const Double& h) { return region_of(h) == Region::QuadrantI; };
    return f;
}

HFunction zhukowskij_function() {
    HFunction f;
    f.name = "zhukowskij";
    f.eval = [](const Double& h) { return zhukowskij(h); };
    f.deriv = [](const Double& h) { return 0.5 * (Double{1.0} - pow_int(h, -2)); };
    f.domain = [](const Double& h) { return !on_cone(h); };
    return f;
}

std::vector<HFunction> catalog() {
    std::vector<HFunction> out;
    for (int n = -2; n <= 5; ++n) out.push_back(power_function(n));
    out.push_back(exp_function());
    out.push_back(ln_function());
    out.push_back(zhukowskij_function());
    return out;
}

}  // namespace dplane
