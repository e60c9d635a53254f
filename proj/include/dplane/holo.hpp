#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dplane/double.hpp"

namespace dplane {

using DMap = std::function<Double(const Double&)>;
using RealFn = std::function<double(double)>;

// A map of the double plane F = U + jV. The derivative is optional; an empty
// domain predicate means the whole plane.
struct HFunction {
    std::string name;
    DMap eval;
    DMap deriv;
    std::function<bool(const Double&)> domain;

    Double operator()(const Double& h) const { return eval(h); }
    bool contains(const Double& h) const { return !domain || domain(h); }
    bool has_deriv() const { return static_cast<bool>(deriv); }
};

// Componentwise partials of (U, V) with respect to t and x.
struct Jet {
    Double value;
    Double d_t;
    Double d_x;
};

struct Wirtinger {
    Double d_h;
    Double d_hbar;
};

// Default steps balancing truncation against round-off.
double default_step(const Double& h);
double default_step2(const Double& h);

// Central differences; step <= 0 selects default_step. Throws DomainError when
// the stencil leaves the domain or comes within 2*step of the cone.
Jet make_jet(const HFunction& f, const Double& h, double step = 0.0);
Wirtinger wirtinger(const Jet& jet);

// max(|U_t - V_x|, |U_x - V_t|) / max(1, |grad F|).
double cr_residual(const HFunction& f, const Double& h, double step = 0.0);
// Five-point estimate of max(|box U|, |box V|) / max(1, |grad F|); step <= 0 selects default_step2.
double wave_residual(const HFunction& f, const Double& h, double step = 0.0);
// d'Alembertian of F at h (unnormalized).
Double box(const HFunction& f, const Double& h, double step = 0.0);

double conformal_factor(const HFunction& f, const Double& h);
double jacobian_det(const HFunction& f, const Double& h, double step = 0.0);
double level_orthogonality(const HFunction& f, const Double& h, double step = 0.0);

struct RealMap {
    RealFn f;
    RealFn df;  // optional
};

struct IsotropicMap {
    HFunction map;
    std::function<double(const Double&)> factor;  // f1'(xi1) * f2'(xi2)
};

IsotropicMap conformal_isotropic(const RealMap& f1, const RealMap& f2, std::string name = "isotropic");

// (box + mu^2) F + J, componentwise.
Double klein_gordon_residual(const HFunction& f, double mu, const DMap& source, const Double& h,
                             double step = 0.0);

HFunction compose(const HFunction& f, const HFunction& g);
HFunction power_function(int n);
HFunction exp_function();
HFunction ln_function();
HFunction zhukowskij_function();
// Powers -2..5, exp, ln, Zhukowskij.
std::vector<HFunction> catalog();

}  // namespace dplane
