#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dplane/double.hpp"

namespace dplane {

// Linear functional omega(h) = T t + X x in the dual basis 1*, j*.
struct CoVector {
    double T = 0.0;
    double X = 0.0;

    constexpr double operator()(const Double& h) const { return T * h.t + X * h.x; }
    constexpr Double as_double() const { return {T, X}; }
    friend constexpr bool operator==(const CoVector&, const CoVector&) = default;
};

struct StarCross {
    double star = 0.0;
    double cross = 0.0;
};

// star = t1 t2 - x1 x2, cross = t1 x2 - t2 x1.
StarCross star_cross(const Double& a, const Double& b);
StarCross star_cross(const CoVector& a, const CoVector& b);
constexpr double star(const Double& a, const Double& b) { return a.t * b.t - a.x * b.x; }
constexpr double star(const CoVector& a, const CoVector& b) { return a.T * b.T - a.X * b.X; }

// Vectorial conjugation h* = (t, -x) and spinorial conjugation h^x = (-x, t).
constexpr CoVector star_conj(const Double& h) { return {h.t, -h.x}; }
constexpr CoVector cross_conj(const Double& h) { return {-h.x, h.t}; }

struct Frame {
    double v = 0.0;
    double gamma = 1.0;
    CoVector tau{1.0, 0.0};
    CoVector s{0.0, 1.0};
};

// Throws SuperluminalFrame unless |v| < 1.
Frame make_frame(double v);
double lorentz_gamma(double v);
// Unit-norm boost alpha_v = gamma (1 + j v).
Double boost(double v);

struct Projection {
    double hT = 0.0;
    double hX = 0.0;
};

Projection project(const Frame& f, const Double& h);
Projection project(double v, const Double& h);
// h = tau* hT - s* hX, the identity decomposition.
Double reconstruct(const Frame& f, const Projection& p);

// Product of the two tau covectors, read off as v = -X / T.
double compose_velocity(double v1, double v2);

// Involutions acting on the plane or on covectors viewed as doubles.
constexpr Double sigma_t(const Double& h) { return {-h.t, h.x}; }
constexpr Double sigma_x(const Double& h) { return {h.t, -h.x}; }
constexpr Double sigma_I(const Double& h) { return {h.x, h.t}; }

enum class FrameClass { PlusUp, PlusDown, MinusUp, MinusDown };
const char* frame_class_name(FrameClass c);
// Unit covectors only: omega omega-bar = +1 (up when T > 0) or -1 (up when X > 0).
// Throws DomainError otherwise.
FrameClass frame_class(const CoVector& w, double tol = 1e-12);

struct ParticleState {
    Double position;
    Double velocity_2{1.0, 0.0};
    double mass = 1.0;
    double proper_time = 0.0;

    Double momentum() const { return mass * velocity_2; }
    double velocity() const { return velocity_2.x / velocity_2.t; }
};

ParticleState rest_state(const Double& position, double mass);

// Reparametrizes sampled events by proper time. Each node carries the
// 2-velocity of the segment leaving it (the last node repeats the previous).
// Throws NonCausalSegment when a segment has hdot * hdot <= 0 or runs backwards in t.
std::vector<ParticleState> natural_parametrize(const std::vector<Double>& worldline, double mass);

// RK4 for dV/ds = j (f/m) V, dh/ds = V: the boosted rest force j f.
ParticleState dynamics_step(const ParticleState& st, double f, double ds);

using ScalarField = std::function<double(const Double&)>;
// RK4 for dV/ds = j (q/m) E(h) V, dh/ds = V.
ParticleState lorentz_force_step(const ParticleState& st, double q, const ScalarField& field, double ds);

enum class Boundary { Periodic, Dirichlet };

// E lives on the n+1 faces of n cells; rho and v are cell values.
// The face current is the mean of rho v over the adjacent cells and
// E_f -= 2 pi dt J_f. Dirichlet keeps both end faces fixed.
// Throws CFLViolation when dt > dx.
std::vector<double> maxwell_1d_step(const std::vector<double>& E, const std::vector<double>& rho,
                                    const std::vector<double>& v, double dt, double dx,
                                    Boundary bc = Boundary::Periodic);
// Same update with face currents supplied directly.
std::vector<double> maxwell_1d_step(const std::vector<double>& E, const std::vector<double>& face_current,
                                    double dt, double dx, Boundary bc = Boundary::Periodic);

// Face values from dE/dx = 2 pi rho, starting at E_left.
std::vector<double> gauss_field(const std::vector<double>& rho, double dx, double E_left = 0.0);
// Max over cells of |(E_{i+1} - E_i)/dx - 2 pi rho_i|.
double gauss_residual(const std::vector<double>& E, const std::vector<double>& rho, double dx);
// Max over cells of |(rho_after - rho_before)/dt + (F_{i+1} - F_i)/dx| where F
// holds the time-averaged face fluxes rho v (n+1 values).
double continuity_residual(const std::vector<double>& rho_before, const std::vector<double>& rho_after,
                           const std::vector<double>& face_flux, double dt, double dx);

struct ConjugationReport {
    // In the order *-*, x-*, *-x, x-x for the star product, then the same for cross.
    std::array<double, 8> identity_deviation{};
    double component_rule_deviation = 0.0;
    double max_deviation = 0.0;
    int pairs = 0;
};

ConjugationReport conjugation_tables_check(int pairs = 200, unsigned long seed = 7);

}  // namespace dplane
