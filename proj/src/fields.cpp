#include "dplane/fields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Log-type potential -c ln h for the complex coefficient c.
Double log_potential(const Double& c, const Double& lnh) { return -(c * lnh); }

Double log_coefficient(const PotentialSpec& spec, bool& is_log) {
    is_log = true;
    if (auto* s = std::get_if<Source>(&spec.kind)) return {s->q, 0.0};
    if (auto* v = std::get_if<Vortex>(&spec.kind)) return {0.0, v->m};
    if (auto* vs = std::get_if<VortexSource>(&spec.kind)) return complex_charge(*vs);
    is_log = false;
    return {};
}

Double potential_impl(const PotentialSpec& spec, const Double& h, bool with_region) {
    bool is_log = false;
    Double c = log_coefficient(spec, is_log);
    if (is_log) return log_potential(c, with_region ? ln_with_region(h).value : ln(h));
    return std::visit(
        overloaded{
            [&](const Multipole& mp) {
                double sgn = (mp.n % 2 == 1) ? 1.0 : -1.0;
                return sgn * (multipole_charge(mp) * pow_int(h, -mp.n));
            },
            [&](const CylinderUniform& cy) { return -cy.e0 * (h + cy.R * cy.R / h); },
            [&](const Custom& cu) { return cu.f(h); },
            [&](const Superposition& sp) {
                Double sum;
                for (const auto& p : sp.parts) sum += potential_impl(p, h, with_region);
                return sum;
            },
            [&](const auto&) { return Double{}; },
        },
        spec.kind);
}

double abs_power_product(double a1, double e1, double a2, double e2) {
    return std::pow(std::fabs(a1), e1) * std::pow(std::fabs(a2), e2);
}

std::array<double, 6> stencil12() {
    // c_k = (-1)^(k+1) (m!)^2 / (k (m-k)! (m+k)!), m = 6
    std::array<double, 6> c{};
    const int m = 6;
    auto fact = [](int k) {
        double f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int k = 1; k <= m; ++k)
        c[k - 1] = ((k % 2 == 1) ? 1.0 : -1.0) * fact(m) * fact(m) / (k * fact(m - k) * fact(m + k));
    return c;
}

double default_holo_step(const Double& h) {
    Isotropic q = to_isotropic(h);
    double m = std::min(std::fabs(q.xi1), std::fabs(q.xi2));
    if (m == 0.0) throw OnCone("derivative along the light cone is undefined");
    return 0.03 * m;
}

Double derivative_with_step(const DMap& F, const Double& h, double s) {
    static const std::array<double, 6> c = stencil12();
    Double acc;
    for (int k = 6; k >= 1; --k) acc += c[k - 1] * (F(h + Double{k * s, 0}) - F(h - Double{k * s, 0}));
    return acc / s;
}

}  // namespace

PotentialSpec operator+(const PotentialSpec& a, const PotentialSpec& b) {
    Superposition s;
    s.parts = {a, b};
    return {s};
}

std::string spec_name(const PotentialSpec& spec) {
    return std::visit(overloaded{
                          [](const Source&) { return std::string("source"); },
                          [](const Vortex&) { return std::string("vortex"); },
                          [](const VortexSource&) { return std::string("vortex-source"); },
                          [](const Multipole& m) { return "multipole-" + std::to_string(m.n); },
                          [](const CylinderUniform&) { return std::string("cylinder"); },
                          [](const Custom& c) { return "custom:" + c.f.name; },
                          [](const Superposition&) { return std::string("superposition"); },
                      },
                      spec.kind);
}

void validate(const PotentialSpec& spec) {
    if (auto* m = std::get_if<Multipole>(&spec.kind); m && m->n < 1)
        throw DomainError("multipole order must be at least 1");
    if (auto* c = std::get_if<CylinderUniform>(&spec.kind); c && !(c->R > 0))
        throw DomainError("cylinder radius must be positive");
    if (auto* c = std::get_if<Custom>(&spec.kind); c && !c->f.eval)
        throw DomainError("custom potential has no evaluator");
    if (auto* s = std::get_if<Superposition>(&spec.kind))
        for (const auto& p : s->parts) validate(p);
}

Double complex_charge(const VortexSource& vs) { return {vs.q, -vs.m}; }
Double multipole_charge(const Multipole& mp) { return {mp.qe, mp.qm}; }

double multipole_delta(const Multipole& mp) {
    if (!(std::fabs(mp.qm) < std::fabs(mp.qe))) throw DomainError("multipole charge outside the artanh range");
    return std::atanh(mp.qm / mp.qe);
}

Double potential(const PotentialSpec& spec, const Double& h) {
    validate(spec);
    return potential_impl(spec, h, false);
}

RegionPotential potential_with_region(const PotentialSpec& spec, const Double& h) {
    validate(spec);
    return {region_of(h), potential_impl(spec, h, true)};
}

Double strength(const PotentialSpec& spec, const Double& h) {
    validate(spec);
    bool is_log = false;
    Double c = log_coefficient(spec, is_log);
    // F = -c ln h gives F' = -c/h and E = conj(c)/conj(h)
    if (is_log) return conj(c) * (Double{1.0} / conj(h));
    return std::visit(
        overloaded{
            [&](const Multipole& mp) {
                double sgn = (mp.n % 2 == 0) ? 1.0 : -1.0;
                Double d = sgn * mp.n * (multipole_charge(mp) * pow_int(h, -mp.n - 1));
                return -conj(d);
            },
            [&](const CylinderUniform& cy) {
                return cy.e0 * (Double{1.0} - cy.R * cy.R * pow_int(conj(h), -2));
            },
            [&](const Custom& cu) {
                Double d = cu.f.has_deriv() ? cu.f.deriv(h) : wirtinger(make_jet(cu.f, h)).d_h;
                return -conj(d);
            },
            [&](const Superposition& sp) {
                Double sum;
                for (const auto& p : sp.parts) sum += strength(p, h);
                return sum;
            },
            [&](const auto&) { return Double{}; },
        },
        spec.kind);
}

Double dual(const PotentialSpec& spec, const Double& h) { return j_unit * strength(spec, h); }

double field_first_integral(const PotentialSpec& spec, const Double& h, bool use_dual) {
    Isotropic q = to_isotropic(h);
    auto ratio = [&] { return q.xi1 / q.xi2; };
    auto product = [&] { return q.xi1 * q.xi2; };
    if (std::holds_alternative<Source>(spec.kind)) return use_dual ? product() : ratio();
    if (std::holds_alternative<Vortex>(spec.kind)) return use_dual ? ratio() : product();
    if (auto* vs = std::get_if<VortexSource>(&spec.kind)) {
        if (vs->m == 0.0) return use_dual ? product() : ratio();
        double a = vs->q / vs->m;
        return use_dual ? abs_power_product(q.xi1, 1 - a, q.xi2, -(1 + a))
                        : abs_power_product(q.xi1, 1 - a, q.xi2, 1 + a);
    }
    Double F = potential_with_region(spec, h).value;
    return use_dual ? F.t : F.x;
}

double line_invariant(const PotentialSpec& spec, const Double& h) {
    validate(spec);
    if (region_of(h) != Region::QuadrantI) throw DomainError("line invariant needs the open first quadrant");
    PolarForm p = polar_decompose(h);
    if (std::holds_alternative<Source>(spec.kind)) return p.psi;
    if (std::holds_alternative<Vortex>(spec.kind)) return std::log(p.rho);
    if (auto* vs = std::get_if<VortexSource>(&spec.kind)) {
        if (vs->m == 0.0) return p.psi;
        double a = vs->q / vs->m;
        return std::pow(h.t + h.x, 1 - a) * std::pow(h.t - h.x, 1 + a);
    }
    if (auto* mp = std::get_if<Multipole>(&spec.kind)) {
        double sh = std::sinh(mp->n * p.psi - multipole_delta(*mp));
        if (std::fabs(sh) < 1e-14) throw DomainError("multipole invariant undefined where sinh(n psi - delta) = 0");
        return std::pow(p.rho, mp->n) / sh;
    }
    return potential(spec, h).x;
}

const char* stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::MaxLength: return "max-length";
        case StopReason::Cone: return "cone";
        case StopReason::BoundingBox: return "bbox";
        case StopReason::Stagnation: return "stagnation";
        case StopReason::QuadrantChange: return "quadrant";
    }
    return "?";
}

FieldLine trace_field_line(const PotentialSpec& spec, const Double& seed, double ds, double max_len,
                           bool use_dual) {
    TraceOptions opt;
    opt.ds = ds;
    opt.max_len = max_len;
    opt.use_dual = use_dual;
    return trace_field_line(spec, seed, opt);
}

FieldLine trace_field_line(const PotentialSpec& spec, const Double& seed, const TraceOptions& opt) {
    validate(spec);
    if (!(opt.ds > 0)) throw DomainError("step must be positive");
    if (on_cone(seed, default_cone_eps)) throw SeedOnCone("seed lies on the light cone");
    double cone_stop = opt.cone_stop > 0 ? opt.cone_stop : 4.0 * opt.ds;

    auto field = [&](const Double& h) { return opt.use_dual ? dual(spec, h) : strength(spec, h); };
    // unit direction; false when the field is singular or vanishes
    auto direction = [&](const Double& h, Double& out) {
        Double e;
        try {
            e = field(h);
        } catch (const ZeroDivisor&) {
            return false;
        } catch (const DomainError&) {
            return false;
        }
        double n = std::hypot(e.t, e.x);
        if (!std::isfinite(n) || n == 0.0) return false;
        out = e / n;
        return true;
    };
    auto cone_distance = [](const Double& h) {
        Isotropic q = to_isotropic(h);
        return std::min(std::fabs(q.xi1), std::fabs(q.xi2)) / std::sqrt(2.0);
    };
    auto invariant = [&](const Double& h) { return field_first_integral(spec, h, opt.use_dual); };

    Double d0;
    Double e0;
    try {
        e0 = field(seed);
    } catch (const Error& e) {
        throw SeedSingular(std::string("field singular at seed: ") + e.what());
    }
    if (!std::isfinite(e0.t) || !std::isfinite(e0.x)) throw SeedSingular("field not finite at seed");
    if (!direction(seed, d0)) throw SeedSingular("field vanishes at seed");

    FieldLine line;
    line.seed = seed;
    line.points.push_back(seed);
    line.arc.push_back(0.0);
    double i0 = invariant(seed);
    line.invariant.push_back(i0);
    double scale = std::fabs(i0);
    if (!(scale > 0)) {
        Double F = potential_with_region(spec, seed).value;
        scale = std::max(1e-300, std::fabs(F.t) + std::fabs(F.x));
    }
    Region home = region_of(seed);

    const long max_iter = 100 * std::lround(opt.max_len / opt.ds) + 1;
    double arc = 0.0;
    Double h = seed;
    line.stop = StopReason::MaxLength;
    for (long k = 0; k < max_iter && arc < opt.max_len - 1e-6 * opt.ds; ++k) {
        double ds = std::min(opt.ds, opt.max_len - arc);
        if (opt.step_fraction > 0) ds = std::min(ds, opt.step_fraction * cone_distance(h));
        Double k1, k2, k3, k4;
        if (!direction(h, k1) || !direction(h + 0.5 * ds * k1, k2) || !direction(h + 0.5 * ds * k2, k3) ||
            !direction(h + ds * k3, k4)) {
            line.stop = StopReason::Stagnation;
            break;
        }
        Double next = h + (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (next.t < opt.t_min || next.t > opt.t_max || next.x < opt.x_min || next.x > opt.x_max) {
            line.stop = StopReason::BoundingBox;
            break;
        }
        if (cone_distance(next) < cone_stop) {
            line.stop = StopReason::Cone;
            break;
        }
        if (region_of(next) != home) {
            line.stop = StopReason::QuadrantChange;
            break;
        }
        h = next;
        arc += ds;
        double iv = invariant(h);
        line.points.push_back(h);
        line.arc.push_back(arc);
        line.invariant.push_back(iv);
        line.invariant_drift = std::max(line.invariant_drift, std::fabs(iv - i0) / scale);
    }
    return line;
}

double wave_boundary_solution(double R, double phi0, const Double& h) {
    double n = norm_sq(h);
    if (!(n > 0)) throw DomainError("wave solution needs t^2 - x^2 > 0");
    return phi0 + std::log(n / (R * R));
}

Double multipole_closed_form(int n, const Double& Q, const Double& h) {
    double sgn = (n % 2 == 1) ? 1.0 : -1.0;
    return sgn * (Q * pow_int(h, -n));
}

Double holo_derivative(const DMap& F, const Double& h, double step) {
    return derivative_with_step(F, h, step > 0 ? step : default_holo_step(h));
}

Double multipole_induction_step(int n, const Double& Qn, const Double& Qprev, const Double& h) {
    if (n < 2) throw DomainError("induction starts at n = 2");
    DMap prev = [n, Qprev](const Double& z) { return multipole_closed_form(n - 1, Qprev, z); };
    return (Qn / Qprev) * holo_derivative(prev, h) / static_cast<double>(n - 1);
}

Double multipole_recursive(const std::vector<Double>& charges, const Double& h) {
    if (charges.empty()) throw DomainError("need at least the dipole charge");
    double s = default_holo_step(h);
    std::vector<DMap> chain;
    Double q1 = charges[0];
    chain.push_back([q1](const Double& z) { return q1 / z; });
    for (std::size_t k = 1; k < charges.size(); ++k) {
        Double ratio = charges[k] / charges[k - 1];
        double norm = static_cast<double>(k);  // n - 1 with n = k + 1
        DMap prev = chain.back();
        chain.push_back([=](const Double& z) { return ratio * derivative_with_step(prev, z, s) / norm; });
    }
    return chain.back()(h);
}

}  // namespace dplane
