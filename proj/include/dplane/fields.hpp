#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dplane/double.hpp"
#include "dplane/holo.hpp"

namespace dplane {

struct Source {
    double q = 1.0;
};
// Point vortex, potential -j m ln h.
struct Vortex {
    double m = 1.0;
};
// Complex charge q - j m, potential -(q - j m) ln h.
struct VortexSource {
    double q = 1.0;
    double m = 0.0;
};
// Potential (-1)^(n+1) Q / h^n with Q = qe + j qm.
struct Multipole {
    int n = 1;
    double qe = 1.0;
    double qm = 0.0;
};
// Potential -E0 (h + R^2/h).
struct CylinderUniform {
    double e0 = 1.0;
    double R = 1.0;
};
struct Custom {
    HFunction f;
};

struct PotentialSpec;
struct Superposition {
    std::vector<PotentialSpec> parts;
};

struct PotentialSpec {
    std::variant<Source, Vortex, VortexSource, Multipole, CylinderUniform, Custom, Superposition> kind;
};

PotentialSpec operator+(const PotentialSpec& a, const PotentialSpec& b);
std::string spec_name(const PotentialSpec& spec);
// Throws DomainError for n < 1 or R <= 0.
void validate(const PotentialSpec& spec);

Double complex_charge(const VortexSource& vs);
Double multipole_charge(const Multipole& mp);
// artanh(qm / qe); DomainError when |qm| >= |qe|.
double multipole_delta(const Multipole& mp);

Double potential(const PotentialSpec& spec, const Double& h);

struct RegionPotential {
    Region region;
    Double value;  // ln terms use the quadrant-I representative h / epsilon
};
RegionPotential potential_with_region(const PotentialSpec& spec, const Double& h);

// E = -conj(F'(h)).
Double strength(const PotentialSpec& spec, const Double& h);
// B = j E.
Double dual(const PotentialSpec& spec, const Double& h);

// First integral along field lines (dual = false) or dual lines (dual = true),
// usable in every quadrant: Im F resp. Re F, or a multiplicative closed form
// for the logarithmic kinds.
double field_first_integral(const PotentialSpec& spec, const Double& h, bool dual);

// Closed-form invariant on the open first quadrant.
double line_invariant(const PotentialSpec& spec, const Double& h);

struct TraceOptions {
    double ds = 1e-3;
    double max_len = 10.0;
    bool use_dual = false;
    double t_min = -10, t_max = 10, x_min = -10, x_max = 10;
    double cone_stop = 0.0;  // distance to the cone; <= 0 means 4 * ds
    // Steps shrink to step_fraction * (distance to the cone) near the
    // singular set; <= 0 keeps the fixed step.
    double step_fraction = 0.02;
};

enum class StopReason { MaxLength, Cone, BoundingBox, Stagnation, QuadrantChange };
const char* stop_reason_name(StopReason r);

struct FieldLine {
    Double seed;
    std::vector<Double> points;
    std::vector<double> arc;        // arc length at each point
    std::vector<double> invariant;  // first integral at each point
    double invariant_drift = 0.0;   // max relative deviation from the seed value
    StopReason stop = StopReason::MaxLength;
};

// RK4 on dh/ds = E/|E| (Euclidean), or B/|B| for dual lines.
FieldLine trace_field_line(const PotentialSpec& spec, const Double& seed, const TraceOptions& opt);
FieldLine trace_field_line(const PotentialSpec& spec, const Double& seed, double ds, double max_len,
                           bool use_dual);

// phi0 + ln((t^2 - x^2) / R^2); DomainError outside the timelike region.
double wave_boundary_solution(double R, double phi0, const Double& h);

Double multipole_closed_form(int n, const Double& Q, const Double& h);
// Twelfth-order central difference of F along t; step <= 0 picks 0.03 * min |xi_i|.
Double holo_derivative(const DMap& F, const Double& h, double step = 0.0);
// One induction step: charge ratio times the numeric derivative of the
// closed-form F_{n-1}, divided by n - 1 (see README).
Double multipole_induction_step(int n, const Double& Qn, const Double& Qprev, const Double& h);
// Full chain from F_1 = Q1/h through nested numeric derivatives;
// charges[k] is Q^(k+1).
Double multipole_recursive(const std::vector<Double>& charges, const Double& h);

}  // namespace dplane
