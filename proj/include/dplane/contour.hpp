#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dplane/double.hpp"
#include "dplane/holo.hpp"

namespace dplane {

struct PathSample {
    double param;
    Double point;
};

// Sampled curve. Segments that overlap a pinch gap (a parameter interval
// around a cone crossing of the integrand's singular set) are skipped.
struct Path {
    std::vector<PathSample> samples;
    bool closed = false;
    std::vector<std::pair<double, double>> pinch_gaps;
};

struct Estimate {
    Double value;
    double error = 0.0;
};

struct Flow {
    double circulation = 0.0;  // Upsilon
    double flow = 0.0;         // Xi
    double error = 0.0;
};

Path sample_path(const std::function<Double(double)>& gamma, double a, double b, int n, bool closed = false);
Path straight_path(const Double& a, const Double& b, int n);

// Trapezoid rule in dh over each gap-free run, Richardson-corrected against
// the every-other-sample rule; error is the size of that correction.
Estimate integrate(const DMap& f, const Path& path);
// Omega = integral of E dh-bar = Upsilon - j Xi.
Flow circulation_flow(const DMap& field, const Path& path);

struct HyperbolicCircleContour {
    double rho = 1.0;
    double psi_cutoff = 1.0;
    Double center;
    std::vector<Region> quadrants{Region::QuadrantI, Region::QuadrantII, Region::QuadrantIII,
                                  Region::QuadrantIV};
    double pinch_epsilon = 1e-6;  // gap half-length in units of rho
};

enum class ContourMode {
    PerArc,     // open arcs, each in increasing psi
    ClosedLoop  // all four arcs joined by chords across the cone of the centre
};

// Regularized angle measure of one arc, 2 * psi_cutoff.
double ell_h(const HyperbolicCircleContour& c);
Double arc_point(const HyperbolicCircleContour& c, Region quadrant, double psi);

// Adaptive Gauss-Kronrod on the exact arc parametrization.
Estimate arc_integral(const DMap& f, const HyperbolicCircleContour& c, Region quadrant);
Flow arc_circulation_flow(const DMap& field, const HyperbolicCircleContour& c, Region quadrant);

// Closed loop: arcs I, III in +psi, arcs II, IV in -psi, joined by four chords.
// With pinch set, a symmetric gap is cut where each chord crosses the cone of
// the centre and the bound max|f| * gap length is added to the error.
Estimate closed_loop_integral(const DMap& f, const HyperbolicCircleContour& c, bool pinch);
Path closed_loop_path(const HyperbolicCircleContour& c, int samples_per_piece, bool pinch);

// Integral of (h - h0)^alpha. alpha = -1 defaults to per-arc, others to the
// pinched closed loop.
Estimate residue_integral(const Double& h0, int alpha, const HyperbolicCircleContour& c);
Estimate residue_integral(const Double& h0, int alpha, const HyperbolicCircleContour& c, ContourMode mode);

// Sum over the contour's arcs of F(h)/(h - h0) dh divided by j * (arcs * 2 psi_cutoff).
Estimate cauchy_value(const DMap& f, const HyperbolicCircleContour& c);

}  // namespace dplane
