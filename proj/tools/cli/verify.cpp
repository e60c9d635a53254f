#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "dplane/contour.hpp"
#include "dplane/cplane.hpp"
#include "dplane/errors.hpp"
#include "dplane/fields.hpp"
#include "dplane/holo.hpp"
#include "dplane/poly.hpp"
#include "dplane/srt.hpp"

namespace dplane::cli {

namespace {

using Rng = std::mt19937_64;

constexpr double kStep = 1e-4;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

// Off-cone point with |xi_i| in [0.5, 2] inside the function's domain.
Double domain_point(const HFunction& f, Rng& rng) {
    for (;;) {
        double s1 = uniform(rng, 0, 1) < 0.5 ? -1 : 1, s2 = uniform(rng, 0, 1) < 0.5 ? -1 : 1;
        Double h = from_isotropic({s1 * uniform(rng, 0.5, 2.0), s2 * uniform(rng, 0.5, 2.0)});
        if (f.contains(h)) return h;
    }
}

HFunction conj_control() {
    HFunction f;
    f.name = "conj(h)";
    f.eval = [](const Double& h) { return conj(h); };
    return f;
}

HFunction modulus_control() {
    HFunction f;
    f.name = "h*conj(h)";
    f.eval = [](const Double& h) { return h * conj(h); };
    return f;
}

std::vector<Check> suite_cr_or_wave(bool wave, int samples, unsigned long seed) {
    const double tol = 100 * kStep * kStep;
    std::vector<Check> out;
    Rng rng(seed);
    auto residual = [&](const HFunction& f, const Double& h) {
        return wave ? wave_residual(f, h, kStep) : cr_residual(f, h, kStep);
    };
    for (const auto& f : catalog()) {
        double worst = 0.0;
        for (int k = 0; k < samples; ++k) worst = std::max(worst, residual(f, domain_point(f, rng)));
        out.push_back({(wave ? "wave " : "cr ") + f.name, worst, tol});
    }
    // controls must fail by six orders of magnitude
    HFunction control = wave ? modulus_control() : conj_control();
    double least = HUGE_VAL;
    for (int k = 0; k < samples; ++k) least = std::min(least, residual(control, domain_point(control, rng)));
    out.push_back({(wave ? "wave control " : "cr control ") + control.name, least, 1e6 * tol, true});
    return out;
}

JBasisCoords from_general_solution(const std::function<double(double)>& F, const JBasisCoords& p) {
    double x1 = p[0], x2 = p[1], x3 = p[2];
    double a = F(x1 - x2 - x3), b = F(x2 - x1 - x3), c = F(x3 - x1 - x2);
    return {{b + c, a + c, a + b}};
}

JBasisCoords holomorphic_jmap(const PolyMap& F, const JBasisCoords& p) { return basis_convert(F(basis_convert(p))); }

Poly3 random_poly(Rng& rng, bool positive) {
    Poly3 p;
    for (int i = 0; i < 3; ++i) {
        double m = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
        p[i] = (positive || uniform(rng, 0, 1) < 0.5) ? m : -m;
    }
    return p;
}

std::vector<Check> suite_poly(int samples, unsigned long seed) {
    Rng rng(seed);
    std::vector<Check> out;
    const int pairs = std::max(samples, 1000);

    double norm_err = 0.0, chi_err = 0.0;
    for (int k = 0; k < pairs; ++k) {
        Poly3 a = random_poly(rng, false), b = random_poly(rng, false);
        double lhs = pseudonorm(a * b), rhs = pseudonorm(a) * pseudonorm(b);
        norm_err = std::max(norm_err, std::fabs(lhs - rhs) / std::fabs(rhs));
        auto e = exp_and_angles(random_poly(rng, true));
        chi_err = std::max(chi_err, std::fabs(e.chi[0] + e.chi[1] + e.chi[2]));
    }
    out.push_back({"norm multiplicativity", norm_err, 1e-12});
    out.push_back({"exponential angles sum", chi_err, 1e-12});
    out.push_back({"<I,I,I> = 6", std::fabs(nproduct(poly_unit, poly_unit, poly_unit) - 6.0), 0.0});

    double conj_sum_err = 0.0;
    for (int k = 0; k < 100; ++k) {
        Poly3 a = random_poly(rng, false), b = random_poly(rng, false), c = random_poly(rng, false);
        Poly3 s = nproduct_conjugation_sum(a, b, c);
        double n = nproduct(a, b, c);
        for (int i = 0; i < 3; ++i) conj_sum_err = std::max(conj_sum_err, std::fabs(s[i] - n) / std::max(1.0, std::fabs(n)));
    }
    out.push_back({"conjugation sum = nproduct * I", conj_sum_err, 1e-12});

    const double tol3 = 500 * kStep * kStep;
    auto cubic = [](double u) { return u * u * u - 2 * u * u + 0.5 * u + 1; };
    auto sine = [](double u) { return std::sin(u); };
    double cr_cubic = 0.0, cr_sin = 0.0, cr_h2 = 0.0;
    for (int k = 0; k < samples; ++k) {
        Triple x{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        cr_cubic = std::max(cr_cubic, cr3_residual([&](const JBasisCoords& p) { return from_general_solution(cubic, p); }, x, kStep));
        cr_sin = std::max(cr_sin, cr3_residual([&](const JBasisCoords& p) { return from_general_solution(sine, p); }, x, kStep));
        cr_h2 = std::max(cr_h2, cr3_residual([](const JBasisCoords& p) {
                                  return holomorphic_jmap([](const Poly3& h) { return h * h; }, p);
                              }, x, kStep));
    }
    out.push_back({"cr3 general solution, cubic", cr_cubic, tol3});
    out.push_back({"cr3 general solution, sin", cr_sin, tol3});
    out.push_back({"cr3 h^2", cr_h2, tol3});
    double control = cr3_residual([](const JBasisCoords& p) { return JBasisCoords{{p[0], 0.0, 0.0}}; }, {0.3, 0.2, 0.1},
                                  kStep);
    out.push_back({"cr3 control (x1, 0, 0)", control, 0.1, true});

    // The eight-point stencil is exact on cubics, leaving only round-off.
    const double step3 = 1e-2;
    double d3_holo = 0.0;
    for (int k = 0; k < samples; ++k) {
        Triple x{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        for (int comp = 0; comp < 3; ++comp) {
            auto U = [comp](const Triple& p) {
                return holomorphic_jmap([](const Poly3& h) { return h * h * h; }, JBasisCoords{p})[comp];
            };
            d3_holo = std::max(d3_holo, std::fabs(delta3_residual(U, x, step3)));
        }
    }
    out.push_back({"delta3 of h^3 components", d3_holo, 1e-8});
    double d3_prod = delta3_residual([](const Triple& p) { return p[0] * p[1] * p[2]; }, {0.4, -0.7, 1.1}, step3);
    out.push_back({"delta3 x1 x2 x3 = -1/4", std::fabs(d3_prod + 0.25), 1e-10});
    return out;
}

// Cell average and time-averaged face flux of a Gaussian blob translating at speed u.
struct Blob {
    double width = 0.1, u = 0.5, x0 = 0.8;
    double primitive(double y) const {
        return width * std::sqrt(std::numbers::pi / 2) * std::erf(y / (std::sqrt(2.0) * width));
    }
    double cell_average(double a, double b, double t) const {
        return (primitive(b - x0 - u * t) - primitive(a - x0 - u * t)) / (b - a);
    }
    double face_flux(double xf, double t0, double t1) const {
        return (primitive(xf - x0 - u * t0) - primitive(xf - x0 - u * t1)) / (t1 - t0);
    }
};

std::vector<Check> suite_srt(int samples, unsigned long seed) {
    Rng rng(seed);
    std::vector<Check> out;
    out.push_back({"compose_velocity(0.5, 0.5) = 0.8", std::fabs(compose_velocity(0.5, 0.5) - 0.8), 1e-12});

    double interval = 0.0, active_passive = 0.0, rebuild = 0.0;
    for (int k = 0; k < samples; ++k) {
        double v = uniform(rng, -0.95, 0.95);
        Double h{uniform(rng, -5, 5), uniform(rng, -5, 5)};
        Frame f = make_frame(v);
        Projection p = project(f, h);
        double scale = std::max(1.0, h.t * h.t + h.x * h.x);
        interval = std::max(interval, std::fabs((p.hT * p.hT - p.hX * p.hX) - norm_sq(h)) / scale);
        Double moved = boost(v) * h;
        active_passive = std::max({active_passive, std::fabs(f.tau(moved) - h.t), std::fabs(f.s(moved) - h.x)});
        Double back = reconstruct(f, p);
        rebuild = std::max({rebuild, std::fabs(back.t - h.t), std::fabs(back.x - h.x)});
    }
    out.push_back({"interval invariance under project", interval, 1e-12});
    out.push_back({"active/passive projections", active_passive, 1e-12});
    out.push_back({"identity decomposition", rebuild, 1e-12});

    {
        ParticleState st = rest_state({}, 2.0);
        const double f = 2.0, ds = 1e-3;
        for (int k = 0; k < 1000; ++k) st = dynamics_step(st, f, ds);
        out.push_back({"constant force v = tanh(f s/m)", std::fabs(st.velocity() - std::tanh(f * st.proper_time / st.mass)),
                       1e-8});
    }
    {
        ParticleState st = rest_state({}, 1.0);
        auto field = [](const Double& h) { return 0.5 + 0.2 * std::sin(h.x) * std::cos(0.3 * h.t); };
        double drift = 0.0;
        for (int k = 0; k < 10000; ++k) {
            st = lorentz_force_step(st, 1.0, field, 1e-3);
            drift = std::max(drift, std::fabs(star(st.velocity_2, st.velocity_2) - 1.0));
        }
        out.push_back({"Lorentz force |V*V - 1| over 1e4 steps", drift, 1e-10});
    }
    {
        ConjugationReport rep = conjugation_tables_check(200, seed);
        const char* names[8] = {"h1* . h2* = star",  "h1x . h2* = cross",  "h1* . h2x = -cross", "h1x . h2x = -star",
                                "h1* x h2* = -cross", "h1x x h2* = -star", "h1* x h2x = star",   "h1x x h2x = cross"};
        for (int i = 0; i < 8; ++i) out.push_back({std::string("conjugation ") + names[i], rep.identity_deviation[i], 1e-12});
        out.push_back({"conjugation component rules", rep.component_rule_deviation, 1e-12});
    }
    {
        const int n = 200;
        const double L = 2.0, dx = L / n, rho0 = 0.75;
        std::vector<double> rho(n, rho0), v(n, 0.0);
        std::vector<double> E = gauss_field(rho, dx, -0.3);
        std::vector<double> E1 = maxwell_1d_step(E, rho, v, 0.5 * dx, dx);
        double slope = 0.0, moved = 0.0;
        for (int i = 0; i < n; ++i) {
            slope = std::max(slope, std::fabs((E1[i + 1] - E1[i]) / dx - 2 * std::numbers::pi * rho0));
            moved = std::max(moved, std::fabs(E1[i] - E[i]));
        }
        slope = std::max(slope, std::fabs((E1[n] - E1[0]) / L - 2 * std::numbers::pi * rho0));
        out.push_back({"Maxwell static slope 2 pi rho0", slope, 1e-6});
        out.push_back({"Maxwell static field unchanged", moved, 1e-12});
    }
    {
        Blob blob;
        const int n = 400;
        const double dx = 2.0 / n, dt = 0.4 * dx, t0 = 0.2;
        std::vector<double> before(n), after(n), flux(n + 1), E(n + 1);
        for (int i = 0; i < n; ++i) {
            before[i] = blob.cell_average(i * dx, (i + 1) * dx, t0);
            after[i] = blob.cell_average(i * dx, (i + 1) * dx, t0 + dt);
        }
        for (int f = 0; f <= n; ++f) flux[f] = blob.face_flux(f * dx, t0, t0 + dt);
        out.push_back({"continuity residual, translating blob", continuity_residual(before, after, flux, dt, dx), 1e-8});
        std::vector<double> E0 = gauss_field(before, dx, 0.0);
        std::vector<double> E1 = maxwell_1d_step(E0, flux, dt, dx);
        out.push_back({"Gauss law carried by the current update", gauss_residual(E1, after, dx), 1e-8});
    }
    {
        Frame f = make_frame(0.37);
        bool ok = frame_class(f.tau) == FrameClass::PlusUp &&
                  frame_class(CoVector{sigma_t(f.tau.as_double()).t, sigma_t(f.tau.as_double()).x}) ==
                      FrameClass::PlusDown &&
                  frame_class(CoVector{sigma_I(f.tau.as_double()).t, sigma_I(f.tau.as_double()).x}) ==
                      FrameClass::MinusUp &&
                  frame_class(CoVector{sigma_x(sigma_I(f.tau.as_double())).t, sigma_x(sigma_I(f.tau.as_double())).x}) ==
                      FrameClass::MinusDown;
        out.push_back({"frame classes under sigma_t, sigma_I, sigma_x sigma_I", ok ? 0.0 : 1.0, 0.0});
    }
    return out;
}

std::vector<Check> suite_dual(int samples, unsigned long seed) {
    Rng rng(seed);
    std::vector<Check> out;
    const double two_pi = 2 * std::numbers::pi;

    CFlux cs = circulation_flux(CSource{1.0}, 1.0, 4096);
    out.push_back({"complex source flux = 2 pi", std::fabs(cs.pi - two_pi) + std::fabs(cs.gamma), 1e-8});
    CFlux cv = circulation_flux(CVortex{1.0}, 1.0, 4096);
    out.push_back({"complex vortex circulation = 2 pi", std::fabs(cv.gamma - two_pi) + std::fabs(cv.pi), 1e-8});

    HyperbolicCircleContour arc;
    arc.rho = 1.0;
    arc.psi_cutoff = 3.0;
    arc.quadrants = {Region::QuadrantI};
    auto hyper = [&](const PotentialSpec& spec) {
        return arc_circulation_flow([spec](const Double& h) { return strength(spec, h); }, arc, Region::QuadrantI);
    };
    Flow hs = hyper({Source{1.0}});
    out.push_back({"hyperbolic source flow = 2 Psi", std::fabs(hs.flow - 6.0) + std::fabs(hs.circulation), 1e-6});
    Flow hv = hyper({Vortex{1.0}});
    out.push_back({"hyperbolic vortex circulation = 2 Psi", std::fabs(hv.circulation - 6.0) + std::fabs(hv.flow), 1e-6});

    const std::vector<std::pair<CKind, PotentialSpec>> pairs{
        {CSource{1.0}, {Source{1.0}}},
        {CVortex{1.0}, {Vortex{1.0}}},
        {CVortexSource{1.0, 2.0}, {VortexSource{1.0, 2.0}}},
        {CMultipole{2, 1.0, 0.5}, {Multipole{2, 1.0, 0.5}}},
        {CCylinder{1.0, 1.0}, {CylinderUniform{1.0, 1.0}}},
    };
    const char* names[] = {"source", "vortex", "vortex-source", "quadrupole", "cylinder"};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        double ce = 0.0, he = 0.0;
        for (int i = 0; i < samples; ++i) {
            Complex z = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, two_pi));
            Complex E = cstrength(pairs[k].first, z), B = cdual(pairs[k].first, z);
            ce = std::max(ce, std::fabs((B * std::conj(E)).real()) / std::max(1.0, std::norm(E)));
            Double h = from_isotropic({(uniform(rng, 0, 1) < 0.5 ? -1 : 1) * uniform(rng, 0.5, 2.0),
                                       (uniform(rng, 0, 1) < 0.5 ? -1 : 1) * uniform(rng, 0.5, 2.0)});
            Double He = strength(pairs[k].second, h), Hb = dual(pairs[k].second, h);
            he = std::max(he, std::fabs(star(Hb, He)) / std::max(1.0, He.t * He.t + He.x * He.x));
        }
        out.push_back({std::string("elliptic ") + names[k] + " Re(B conj E) = 0", ce, 1e-10});
        out.push_back({std::string("hyperbolic ") + names[k] + " B star E = 0", he, 1e-10});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cr", "wave", "poly", "srt", "dual"};
    return names;
}

std::vector<Check> run_suite(const std::string& suite, int samples, unsigned long seed) {
    if (samples < 1) throw ConfigError("samples must be positive");
    if (suite == "cr") return suite_cr_or_wave(false, samples, seed);
    if (suite == "wave") return suite_cr_or_wave(true, samples, seed);
    if (suite == "poly") return suite_poly(samples, seed);
    if (suite == "srt") return suite_srt(samples, seed);
    if (suite == "dual") return suite_dual(samples, seed);
    throw ConfigError("unknown suite '" + suite + "'; expected cr, wave, poly, srt or dual");
}

bool print_checks(std::ostream& out, const std::vector<Check>& checks) {
    bool all = true;
    char buf[64];
    for (const auto& c : checks) {
        all = all && c.pass();
        out << c.name << "  residual ";
        std::snprintf(buf, sizeof buf, "%.3e", c.value);
        out << buf << (c.at_least ? "  need >= " : "  tol ");
        std::snprintf(buf, sizeof buf, "%.3e", c.tolerance);
        out << buf << "  " << (c.pass() ? "PASS" : "FAIL") << '\n';
    }
    return all;
}

}  // namespace dplane::cli
