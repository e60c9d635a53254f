#include "dplane/srt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

void require_subluminal(double v) {
    if (!(std::fabs(v) < 1.0)) throw SuperluminalFrame("frame speed must satisfy |v| < 1");
}

struct Phase {
    Double h;
    Double V;
};

template <class Rhs>
Phase rk4(const Phase& y, double ds, Rhs rhs) {
    auto add = [](const Phase& a, const Phase& k, double c) { return Phase{a.h + c * k.h, a.V + c * k.V}; };
    Phase k1 = rhs(y);
    Phase k2 = rhs(add(y, k1, 0.5 * ds));
    Phase k3 = rhs(add(y, k2, 0.5 * ds));
    Phase k4 = rhs(add(y, k3, ds));
    return {y.h + (ds / 6.0) * (k1.h + 2.0 * k2.h + 2.0 * k3.h + k4.h),
            y.V + (ds / 6.0) * (k1.V + 2.0 * k2.V + 2.0 * k3.V + k4.V)};
}

double face_from_cells(const std::vector<double>& c, std::size_t f, Boundary bc) {
    const std::size_t n = c.size();
    if (f > 0 && f < n) return 0.5 * (c[f - 1] + c[f]);
    if (bc == Boundary::Periodic) return 0.5 * (c[n - 1] + c[0]);
    return 0.0;
}

}  // namespace

StarCross star_cross(const Double& a, const Double& b) { return {a.t * b.t - a.x * b.x, a.t * b.x - b.t * a.x}; }

StarCross star_cross(const CoVector& a, const CoVector& b) {
    return {a.T * b.T - a.X * b.X, a.T * b.X - b.T * a.X};
}

double lorentz_gamma(double v) {
    require_subluminal(v);
    return 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

Frame make_frame(double v) {
    double g = lorentz_gamma(v);
    return {v, g, {g, -g * v}, {-g * v, g}};
}

Double boost(double v) {
    double g = lorentz_gamma(v);
    return {g, g * v};
}

Projection project(const Frame& f, const Double& h) { return {f.tau(h), f.s(h)}; }

Projection project(double v, const Double& h) { return project(make_frame(v), h); }

Double reconstruct(const Frame& f, const Projection& p) {
    Double tau_star{f.gamma, f.gamma * f.v};
    Double s_star{-f.gamma * f.v, -f.gamma};
    return p.hT * tau_star - p.hX * s_star;
}

double compose_velocity(double v1, double v2) {
    Double t = make_frame(v1).tau.as_double() * make_frame(v2).tau.as_double();
    return -t.x / t.t;
}

const char* frame_class_name(FrameClass c) {
    switch (c) {
        case FrameClass::PlusUp: return "IR+up";
        case FrameClass::PlusDown: return "IR+down";
        case FrameClass::MinusUp: return "IR-up";
        case FrameClass::MinusDown: return "IR-down";
    }
    return "?";
}

FrameClass frame_class(const CoVector& w, double tol) {
    double n = star(w, w);
    if (std::fabs(n - 1.0) <= tol) return w.T > 0 ? FrameClass::PlusUp : FrameClass::PlusDown;
    if (std::fabs(n + 1.0) <= tol) return w.X > 0 ? FrameClass::MinusUp : FrameClass::MinusDown;
    throw DomainError("covector is not unit: omega omega-bar must be +1 or -1");
}

ParticleState rest_state(const Double& position, double mass) { return {position, {1.0, 0.0}, mass, 0.0}; }

std::vector<ParticleState> natural_parametrize(const std::vector<Double>& worldline, double mass) {
    if (worldline.size() < 2) throw DomainError("a world line needs at least two events");
    if (!(mass > 0)) throw DomainError("mass must be positive");
    std::vector<ParticleState> out;
    out.reserve(worldline.size());
    double s = 0.0;
    Double V;
    for (std::size_t k = 0; k + 1 < worldline.size(); ++k) {
        Double d = worldline[k + 1] - worldline[k];
        double n = star(d, d);
        if (!(n > 0) || !(d.t > 0))
            throw NonCausalSegment("segment " + std::to_string(k) + " is not causal and future-oriented");
        double ds = std::sqrt(n);
        V = d / ds;
        out.push_back({worldline[k], V, mass, s});
        s += ds;
    }
    out.push_back({worldline.back(), V, mass, s});
    return out;
}

ParticleState dynamics_step(const ParticleState& st, double f, double ds) {
    const double a = f / st.mass;
    Phase y = rk4({st.position, st.velocity_2}, ds,
                  [a](const Phase& p) { return Phase{p.V, a * (j_unit * p.V)}; });
    return {y.h, y.V, st.mass, st.proper_time + ds};
}

ParticleState lorentz_force_step(const ParticleState& st, double q, const ScalarField& field, double ds) {
    const double qm = q / st.mass;
    Phase y = rk4({st.position, st.velocity_2}, ds,
                  [&](const Phase& p) { return Phase{p.V, (qm * field(p.h)) * (j_unit * p.V)}; });
    return {y.h, y.V, st.mass, st.proper_time + ds};
}

std::vector<double> maxwell_1d_step(const std::vector<double>& E, const std::vector<double>& rho,
                                    const std::vector<double>& v, double dt, double dx, Boundary bc) {
    if (rho.size() != v.size() || E.size() != rho.size() + 1)
        throw DomainError("need n cells of rho and v and n+1 faces of E");
    std::vector<double> flux(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) flux[i] = rho[i] * v[i];
    std::vector<double> J(E.size());
    for (std::size_t f = 0; f < E.size(); ++f) J[f] = face_from_cells(flux, f, bc);
    return maxwell_1d_step(E, J, dt, dx, bc);
}

std::vector<double> maxwell_1d_step(const std::vector<double>& E, const std::vector<double>& face_current,
                                    double dt, double dx, Boundary bc) {
    if (!(dx > 0) || !(dt > 0)) throw DomainError("dt and dx must be positive");
    if (dt > dx) throw CFLViolation("time step exceeds the light-cone bound dt <= dx");
    if (face_current.size() != E.size() || E.size() < 2) throw DomainError("face current size mismatch");
    std::vector<double> out(E);
    const double c = 2 * std::numbers::pi * dt;
    const std::size_t last = E.size() - 1;
    for (std::size_t f = 0; f <= last; ++f) {
        if (bc == Boundary::Dirichlet && (f == 0 || f == last)) continue;
        out[f] -= c * face_current[f];
    }
    return out;
}

std::vector<double> gauss_field(const std::vector<double>& rho, double dx, double E_left) {
    std::vector<double> E(rho.size() + 1);
    E[0] = E_left;
    for (std::size_t i = 0; i < rho.size(); ++i) E[i + 1] = E[i] + 2 * std::numbers::pi * rho[i] * dx;
    return E;
}

double gauss_residual(const std::vector<double>& E, const std::vector<double>& rho, double dx) {
    if (E.size() != rho.size() + 1) throw DomainError("need n+1 faces for n cells");
    double r = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        r = std::max(r, std::fabs((E[i + 1] - E[i]) / dx - 2 * std::numbers::pi * rho[i]));
    return r;
}

double continuity_residual(const std::vector<double>& rho_before, const std::vector<double>& rho_after,
                           const std::vector<double>& face_flux, double dt, double dx) {
    if (rho_before.size() != rho_after.size() || face_flux.size() != rho_before.size() + 1)
        throw DomainError("continuity residual size mismatch");
    double r = 0.0;
    for (std::size_t i = 0; i < rho_before.size(); ++i) {
        double v = (rho_after[i] - rho_before[i]) / dt + (face_flux[i + 1] - face_flux[i]) / dx;
        r = std::max(r, std::fabs(v));
    }
    return r;
}

ConjugationReport conjugation_tables_check(int pairs, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    ConjugationReport rep;
    rep.pairs = pairs;
    for (int k = 0; k < pairs; ++k) {
        Double h1{U(rng), U(rng)}, h2{U(rng), U(rng)}, q{U(rng), U(rng)};
        StarCross base = star_cross(h1, h2);
        CoVector s1 = star_conj(h1), s2 = star_conj(h2), c1 = cross_conj(h1), c2 = cross_conj(h2);
        std::array<double, 8> got{
            star_cross(s1, s2).star,  star_cross(c1, s2).star,  star_cross(s1, c2).star,  star_cross(c1, c2).star,
            star_cross(s1, s2).cross, star_cross(c1, s2).cross, star_cross(s1, c2).cross, star_cross(c1, c2).cross};
        std::array<double, 8> want{base.star,   base.cross, -base.cross, -base.star,
                                   -base.cross, -base.star, base.star,   base.cross};
        for (int i = 0; i < 8; ++i)
            rep.identity_deviation[i] = std::max(rep.identity_deviation[i], std::fabs(got[i] - want[i]));
        StarCross hq = star_cross(h1, q);
        rep.component_rule_deviation =
            std::max({rep.component_rule_deviation, std::fabs(s1(q) - hq.star), std::fabs(c1(q) - hq.cross)});
    }
    rep.max_deviation = rep.component_rule_deviation;
    for (double d : rep.identity_deviation) rep.max_deviation = std::max(rep.max_deviation, d);
    return rep;
}

}  // namespace dplane
