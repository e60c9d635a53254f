#include "dplane/contour.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

double mag(const Double& h) { return std::max(std::fabs(h.t), std::fabs(h.x)); }
double euclid(const Double& h) { return std::hypot(h.t, h.x); }

struct Run {
    std::vector<Double> points;
    std::vector<Double> values;
};

std::vector<Run> retained_runs(const DMap& f, const Path& path) {
    const auto& s = path.samples;
    std::vector<Run> runs;
    if (s.size() < 2) return runs;
    std::vector<Double> vals(s.size());
    auto eval = [&](std::size_t i) {
        Double v = f(s[i].point);
        if (!std::isfinite(v.t) || !std::isfinite(v.x))
            throw SingularSample("integrand not finite at parameter " + std::to_string(s[i].param));
        return v;
    };
    std::vector<bool> have(s.size(), false);
    auto value_at = [&](std::size_t i) {
        if (!have[i]) {
            vals[i] = eval(i);
            have[i] = true;
        }
        return vals[i];
    };
    auto in_gap = [&](double a, double b) {
        if (a > b) std::swap(a, b);
        for (const auto& g : path.pinch_gaps)
            if (std::max(a, g.first) < std::min(b, g.second)) return true;
        return false;
    };
    std::size_t nseg = path.closed ? s.size() : s.size() - 1;
    Run cur;
    for (std::size_t k = 0; k < nseg; ++k) {
        std::size_t i = k, j = (k + 1) % s.size();
        bool wrap = j == 0;
        if (!wrap && in_gap(s[i].param, s[j].param)) {
            if (cur.points.size() > 1) runs.push_back(std::move(cur));
            cur = Run{};
            continue;
        }
        if (cur.points.empty()) {
            cur.points.push_back(s[i].point);
            cur.values.push_back(value_at(i));
        }
        cur.points.push_back(s[j].point);
        cur.values.push_back(value_at(j));
    }
    if (cur.points.size() > 1) runs.push_back(std::move(cur));
    return runs;
}

Double step_of(const Double& a, const Double& b, bool conj_dh) {
    Double d = b - a;
    return conj_dh ? conj(d) : d;
}

Estimate trapezoid_richardson(const DMap& f, const Path& path, bool conj_dh) {
    Estimate est;
    for (const Run& r : retained_runs(f, path)) {
        std::size_t n = r.points.size() - 1;
        Double fine, coarse;
        for (std::size_t i = 0; i < n; ++i)
            fine += 0.5 * ((r.values[i] + r.values[i + 1]) * step_of(r.points[i], r.points[i + 1], conj_dh));
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
            coarse += 0.5 * ((r.values[i] + r.values[i + 2]) * step_of(r.points[i], r.points[i + 2], conj_dh));
        if (i < n)
            coarse += 0.5 * ((r.values[i] + r.values[n]) * step_of(r.points[i], r.points[n], conj_dh));
        Double corr = (fine - coarse) / 3.0;
        est.value += fine + corr;
        est.error += mag(corr);
    }
    return est;
}

struct Piece {
    std::function<Double(double)> g;
    std::function<Double(double)> dg;
    double a, b;
    double sign;  // +1 integrate a -> b, -1 reversed
};

Estimate gk(const DMap& f, const Piece& p, bool conj_dh) {
    using boost::math::quadrature::gauss_kronrod;
    auto integrand = [&](double u, bool imag) {
        Double d = p.dg(u);
        Double v = f(p.g(u)) * (conj_dh ? conj(d) : d);
        return imag ? v.x : v.t;
    };
    // a vanishing component never meets the relative tolerance, so the depth stays modest
    double e1 = 0, e2 = 0;
    double vt = gauss_kronrod<double, 31>::integrate([&](double u) { return integrand(u, false); }, p.a, p.b,
                                                     10, 1e-13, &e1);
    double vx = gauss_kronrod<double, 31>::integrate([&](double u) { return integrand(u, true); }, p.a, p.b,
                                                     10, 1e-13, &e2);
    Double val{vt, vx};
    double scale = std::max(1.0, mag(val));
    return {p.sign * val, e1 + e2 + 4e-16 * scale};
}

Piece arc_piece(const HyperbolicCircleContour& c, Region q, double sign) {
    Double eps = sign_factor(q);
    double rho = c.rho;
    Double ctr = c.center;
    Piece p;
    p.g = [=](double psi) { return ctr + rho * (eps * Double{std::cosh(psi), std::sinh(psi)}); };
    p.dg = [=](double psi) { return rho * (eps * Double{std::sinh(psi), std::cosh(psi)}); };
    p.a = -c.psi_cutoff;
    p.b = c.psi_cutoff;
    p.sign = sign;
    return p;
}

Piece chord_piece(const Double& from, const Double& to, double a, double b) {
    Piece p;
    p.g = [=](double u) { return from + u * (to - from); };
    p.dg = [=](double) { return to - from; };
    p.a = a;
    p.b = b;
    p.sign = 1.0;
    return p;
}

void require_quadrant_set(const HyperbolicCircleContour& c) {
    if (!(c.rho > 0) || !(c.psi_cutoff > 0)) throw DomainError("contour needs rho > 0 and psi_cutoff > 0");
    for (Region q : c.quadrants)
        if (!is_quadrant(q)) throw DomainError("contour arcs must be labelled by quadrants");
}

// Loop order and orientation of the four arcs.
constexpr double kSgn[4] = {1.0, -1.0, 1.0, -1.0};
const Region kLoop[4] = {Region::QuadrantI, Region::QuadrantII, Region::QuadrantIII, Region::QuadrantIV};

double gap_halfwidth(const HyperbolicCircleContour& c, const Double& from, const Double& to) {
    double w = c.pinch_epsilon * c.rho / euclid(to - from);
    if (!(w > 0.0 && w < 0.5)) throw DomainError("pinch gap does not fit on the chord");
    return w;
}

}  // namespace

Path sample_path(const std::function<Double(double)>& gamma, double a, double b, int n, bool closed) {
    if (n < 2) throw DomainError("path needs at least two samples");
    Path p;
    p.closed = closed;
    for (int i = 0; i < n; ++i) {
        double u = closed ? a + (b - a) * i / n : a + (b - a) * i / (n - 1);
        p.samples.push_back({u, gamma(u)});
    }
    return p;
}

Path straight_path(const Double& a, const Double& b, int n) {
    return sample_path([=](double u) { return a + u * (b - a); }, 0.0, 1.0, n);
}

Estimate integrate(const DMap& f, const Path& path) { return trapezoid_richardson(f, path, false); }

Flow circulation_flow(const DMap& field, const Path& path) {
    Estimate e = trapezoid_richardson(field, path, true);
    return {e.value.t, -e.value.x, e.error};
}

double ell_h(const HyperbolicCircleContour& c) { return 2.0 * c.psi_cutoff; }

Double arc_point(const HyperbolicCircleContour& c, Region quadrant, double psi) {
    return c.center + c.rho * (sign_factor(quadrant) * Double{std::cosh(psi), std::sinh(psi)});
}

Estimate arc_integral(const DMap& f, const HyperbolicCircleContour& c, Region quadrant) {
    require_quadrant_set(c);
    return gk(f, arc_piece(c, quadrant, 1.0), false);
}

Flow arc_circulation_flow(const DMap& field, const HyperbolicCircleContour& c, Region quadrant) {
    require_quadrant_set(c);
    Estimate e = gk(field, arc_piece(c, quadrant, 1.0), true);
    return {e.value.t, -e.value.x, e.error};
}

Estimate closed_loop_integral(const DMap& f, const HyperbolicCircleContour& c, bool pinch) {
    require_quadrant_set(c);
    Estimate total;
    double P = c.psi_cutoff;
    for (int k = 0; k < 4; ++k) {
        Estimate arc = gk(f, arc_piece(c, kLoop[k], kSgn[k]), false);
        total.value += arc.value;
        total.error += arc.error;
        // chord from the end of leg k to the start of leg k+1
        double end_psi = kSgn[k] > 0 ? P : -P;
        Double from = arc_point(c, kLoop[k], end_psi);
        Double to = arc_point(c, kLoop[(k + 1) % 4], end_psi);
        if (!pinch) {
            Estimate ch = gk(f, chord_piece(from, to, 0.0, 1.0), false);
            total.value += ch.value;
            total.error += ch.error;
            continue;
        }
        double w = gap_halfwidth(c, from, to);
        Estimate left = gk(f, chord_piece(from, to, 0.0, 0.5 - w), false);
        Estimate right = gk(f, chord_piece(from, to, 0.5 + w, 1.0), false);
        total.value += left.value + right.value;
        Double a = from + (0.5 - w) * (to - from), b = from + (0.5 + w) * (to - from);
        double bound = std::max(euclid(f(a)), euclid(f(b))) * 2.0 * w * euclid(to - from);
        total.error += left.error + right.error + bound;
    }
    return total;
}

Path closed_loop_path(const HyperbolicCircleContour& c, int samples_per_piece, bool pinch) {
    require_quadrant_set(c);
    if (samples_per_piece < 4) throw DomainError("need at least four samples per piece");
    Path path;
    path.closed = true;
    double P = c.psi_cutoff;
    int n = samples_per_piece;
    for (int k = 0; k < 4; ++k) {
        double base = 2.0 * k;
        for (int i = 0; i < n; ++i) {
            double u = static_cast<double>(i) / n;
            double psi = kSgn[k] > 0 ? -P + 2 * P * u : P - 2 * P * u;
            path.samples.push_back({base + u, arc_point(c, kLoop[k], psi)});
        }
        double end_psi = kSgn[k] > 0 ? P : -P;
        Double from = arc_point(c, kLoop[k], end_psi);
        Double to = arc_point(c, kLoop[(k + 1) % 4], end_psi);
        auto push = [&](double u) { path.samples.push_back({base + 1.0 + u, from + u * (to - from)}); };
        if (!pinch) {
            for (int i = 0; i < n; ++i) push(static_cast<double>(i) / n);
            continue;
        }
        double w = gap_halfwidth(c, from, to);
        int half = n / 2;
        for (int i = 0; i <= half; ++i) push((0.5 - w) * i / half);
        for (int i = 0; i < half; ++i) push(0.5 + w + (0.5 - w) * i / half);
        path.pinch_gaps.push_back({base + 1.5 - w, base + 1.5 + w});
    }
    return path;
}

Estimate residue_integral(const Double& h0, int alpha, const HyperbolicCircleContour& c) {
    return residue_integral(h0, alpha, c, alpha == -1 ? ContourMode::PerArc : ContourMode::ClosedLoop);
}

Estimate residue_integral(const Double& h0, int alpha, const HyperbolicCircleContour& c, ContourMode mode) {
    if (!(c.center == h0)) throw DomainError("contour must be centred at h0");
    DMap f = [h0, alpha](const Double& h) { return pow_int(h - h0, alpha); };
    if (mode == ContourMode::ClosedLoop) return closed_loop_integral(f, c, alpha < 0);
    Estimate total;
    for (Region q : c.quadrants) {
        Estimate e = arc_integral(f, c, q);
        total.value += e.value;
        total.error += e.error;
    }
    return total;
}

Estimate cauchy_value(const DMap& f, const HyperbolicCircleContour& c) {
    Double h0 = c.center;
    DMap g = [f, h0](const Double& h) { return f(h) / (h - h0); };
    Estimate total;
    for (Region q : c.quadrants) {
        Estimate e = arc_integral(g, c, q);
        total.value += e.value;
        total.error += e.error;
    }
    double ell = ell_h(c) * static_cast<double>(c.quadrants.size());
    // 1/j = j
    return {(j_unit * total.value) / ell, total.error / ell};
}

}  // namespace dplane
