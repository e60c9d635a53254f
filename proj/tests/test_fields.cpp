#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dplane/double.hpp"
#include "dplane/errors.hpp"
#include "dplane/fields.hpp"

using namespace dplane;

namespace {

double dist(const Double& a, const Double& b) { return std::max(std::fabs(a.t - b.t), std::fabs(a.x - b.x)); }

const Double unit_psi1{std::cosh(1.0), std::sinh(1.0)};

Double quadrant_one_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.5, 3), v(-0.8, 0.8);
    double t = u(rng);
    return {t, v(rng) * t};
}

Double off_cone_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3, 3);
    for (;;) {
        Double h{u(rng), u(rng)};
        if (std::fabs(std::fabs(h.t) - std::fabs(h.x)) > 0.3 && std::fabs(h.t) + std::fabs(h.x) > 0.5) return h;
    }
}

}  // namespace

TEST(Potential, Examples) {
    EXPECT_LT(dist(potential({Source{1}}, {std::exp(1.0), 0}), {-1, 0}), 1e-15);
    EXPECT_LT(dist(potential({VortexSource{1, 2}}, unit_psi1), {2, -1}), 1e-14);
    EXPECT_LT(dist(potential({CylinderUniform{1, 1}}, {2, 0}), {-2.5, 0}), 1e-15);
}

TEST(Potential, VortexSourceComponents) {
    // -q ln rho + m psi - j(-m ln rho + q psi)
    const double q = 0.6, m = -1.3, rho = 1.7, psi = 0.45;
    Double h = rho * Double{std::cosh(psi), std::sinh(psi)};
    Double F = potential({VortexSource{q, m}}, h);
    EXPECT_NEAR(F.t, -q * std::log(rho) + m * psi, 1e-14);
    EXPECT_NEAR(F.x, -(-m * std::log(rho) + q * psi), 1e-14);
}

TEST(Potential, DomainAndRegion) {
    EXPECT_THROW(potential({Source{1}}, {-2, 0.5}), DomainError);
    EXPECT_THROW(potential({Multipole{2, 1, 0}}, {1, 1}), ZeroDivisor);
    RegionPotential r = potential_with_region({Source{2}}, {-3, 0});
    EXPECT_EQ(r.region, Region::QuadrantIII);
    EXPECT_LT(dist(r.value, {-2 * std::log(3.0), 0}), 1e-14);
}

TEST(Potential, Validation) {
    EXPECT_THROW(validate({Multipole{0, 1, 0}}), DomainError);
    EXPECT_THROW(validate({CylinderUniform{1, 0}}), DomainError);
    EXPECT_NO_THROW(validate({Multipole{3, 1, 0.2}}));
}

TEST(Strength, Examples) {
    EXPECT_LT(dist(strength({Source{1}}, {2, 1}), {2.0 / 3, 1.0 / 3}), 1e-15);
    EXPECT_LT(dist(strength({CylinderUniform{1, 1}}, {2, 0}), {0.75, 0}), 1e-15);
    EXPECT_LT(dist(strength({Multipole{1, 1, 0}}, {2, 0}), {0.25, 0}), 1e-15);
}

TEST(Strength, SourceClosedFormEverywhere) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        Double h = off_cone_point(rng);
        double n = h.t * h.t - h.x * h.x;
        EXPECT_LT(dist(strength({Source{1.5}}, h), {1.5 * h.t / n, 1.5 * h.x / n}), 1e-13);
    }
}

TEST(Strength, CylinderClosedForm) {
    std::mt19937_64 rng(32);
    const double e0 = 0.8, R = 1.3;
    for (int k = 0; k < 50; ++k) {
        Double h = off_cone_point(rng);
        double n = h.t * h.t - h.x * h.x, n2 = n * n;
        // E0 (1 - R^2 conj(h)^-2)
        Double expect{e0 - e0 * R * R * (h.t * h.t + h.x * h.x) / n2, -e0 * R * R * 2 * h.t * h.x / n2};
        EXPECT_LT(dist(strength({CylinderUniform{e0, R}}, h), expect), 1e-12);
    }
}

TEST(Strength, NegatedConjugateDerivative) {
    std::mt19937_64 rng(33);
    const PotentialSpec specs[] = {{Source{1}},           {Vortex{0.5}},        {VortexSource{1, 2}},
                                   {Multipole{1, 1, 0.3}}, {Multipole{3, 2, -1}}, {CylinderUniform{1, 2}}};
    for (const auto& spec : specs) {
        for (int k = 0; k < 20; ++k) {
            Double h = quadrant_one_point(rng);
            const double s = 1e-5;
            Double dF = (potential(spec, h + Double{s}) - potential(spec, h - Double{s})) / (2 * s);
            Double E = strength(spec, h);
            double scale = std::max(1.0, std::max(std::fabs(E.t), std::fabs(E.x)));
            EXPECT_LT(dist(E, -conj(dF)) / scale, 1e-8) << spec_name(spec);
        }
    }
}

TEST(Strength, AntiHolomorphy) {
    // dE/dh = (E_t,t + E_x,x + j(E_t,x + E_x,t)) / 2 vanishes
    std::mt19937_64 rng(34);
    const PotentialSpec specs[] = {{Source{1}}, {VortexSource{1, 2}}, {Multipole{2, 1, 0.3}}, {CylinderUniform{1, 1}}};
    const double s = 1e-4;
    for (const auto& spec : specs) {
        for (int k = 0; k < 20; ++k) {
            Double h = off_cone_point(rng);
            Double Et = (strength(spec, h + Double{s}) - strength(spec, h - Double{s})) / (2 * s);
            Double Ex = (strength(spec, h + Double{0, s}) - strength(spec, h - Double{0, s})) / (2 * s);
            double scale = std::max({1.0, std::fabs(Et.t), std::fabs(Et.x), std::fabs(Ex.t), std::fabs(Ex.x)});
            EXPECT_LT(std::fabs(Et.t + Ex.x) / scale, 100 * s * s) << spec_name(spec);
            EXPECT_LT(std::fabs(Ex.t + Et.x) / scale, 100 * s * s) << spec_name(spec);
        }
    }
}

TEST(Strength, Superposition) {
    std::mt19937_64 rng(35);
    PotentialSpec a{Source{1}}, b{Multipole{2, 1, 0.5}}, c{CylinderUniform{0.3, 1}};
    PotentialSpec sum = a + b + c;
    for (int k = 0; k < 50; ++k) {
        Double h = off_cone_point(rng);
        Double parts = strength(a, h) + strength(b, h) + strength(c, h);
        EXPECT_LT(dist(strength(sum, h), parts), 1e-12 * std::max(1.0, dist(parts, {})));
    }
}

TEST(Dual, Examples) {
    EXPECT_LT(dist(dual({Source{1}}, {2, 1}), {1.0 / 3, 2.0 / 3}), 1e-15);
    Double B = dual({Source{1}}, from_isotropic({1, 2}));
    Isotropic e = to_isotropic(B);
    EXPECT_NEAR(e.xi1, 0.5, 1e-15);
    EXPECT_NEAR(e.xi2, -1.0, 1e-15);
}

TEST(Dual, PseudoOrthogonal) {
    std::mt19937_64 rng(36);
    for (int k = 0; k < 50; ++k) {
        Double h = off_cone_point(rng);
        Double E = strength({VortexSource{0.4, 1.1}}, h), B = dual({VortexSource{0.4, 1.1}}, h);
        EXPECT_NEAR((B * conj(E)).t, 0.0, 1e-12 * std::max(1.0, std::fabs(norm_sq(E))));
    }
}

TEST(Invariant, Examples) {
    EXPECT_NEAR(line_invariant({Source{1}}, unit_psi1), 1.0, 1e-14);
    EXPECT_NEAR(line_invariant({Vortex{1}}, 2.0 * unit_psi1), std::log(2.0), 1e-14);
    EXPECT_NEAR(line_invariant({Multipole{2, 1, 0}}, unit_psi1), 1 / std::sinh(2.0), 1e-14);
}

TEST(Trace, SourceLinesAreRays) {
    FieldLine L = trace_field_line({Source{1}}, {2, 1}, 1e-3, 5, false);
    ASSERT_GT(L.points.size(), 100u);
    for (const auto& p : L.points) EXPECT_NEAR((p.t + p.x) / (p.t - p.x), 3.0, 3e-6);
    EXPECT_LT(L.invariant_drift, 1e-6);
}

TEST(Trace, DualSourceLinesAreHyperbolas) {
    for (const PotentialSpec& spec : {PotentialSpec{Source{1}}, PotentialSpec{Vortex{1}}}) {
        bool use_dual = std::holds_alternative<Source>(spec.kind);
        FieldLine L = trace_field_line(spec, {2, 1}, 1e-3, 5, use_dual);
        ASSERT_GT(L.points.size(), 100u);
        for (const auto& p : L.points) EXPECT_NEAR((p.t + p.x) * (p.t - p.x), 3.0, 3e-6);
        EXPECT_LT(L.invariant_drift, 1e-6);
    }
}

TEST(Trace, VortexSourceInvariant) {
    // alpha = q/m = -2: (t+x)^3 / (t-x) is constant
    FieldLine L = trace_field_line({VortexSource{-2, 1}}, {2, 1}, 1e-3, 5, false);
    ASSERT_GT(L.points.size(), 100u);
    for (const auto& p : L.points) {
        double I = std::pow(p.t + p.x, 3) / (p.t - p.x);
        EXPECT_NEAR(I / 27.0, 1.0, 1e-5);
    }
}

TEST(Trace, TangentIsOrthogonalToEquipotential) {
    PotentialSpec spec{Multipole{2, 1, 0.2}};
    FieldLine L = trace_field_line(spec, {1.5, 0.3}, 1e-3, 2, false);
    ASSERT_GT(L.points.size(), 10u);
    const double s = 1e-6;
    for (std::size_t k = 1; k + 1 < L.points.size(); k += 25) {
        Double p = L.points[k];
        Double T = L.points[k + 1] - L.points[k - 1];
        double Ut = (potential(spec, p + Double{s}).t - potential(spec, p - Double{s}).t) / (2 * s);
        double Ux = (potential(spec, p + Double{0, s}).t - potential(spec, p - Double{0, s}).t) / (2 * s);
        // equipotential tangent (-U_x, U_t), pseudo-Euclidean product with T
        double w = T.t * -Ux - T.x * Ut;
        double scale = std::hypot(T.t, T.x) * std::hypot(Ut, Ux);
        EXPECT_LT(std::fabs(w) / scale, 1e-6);
    }
}

TEST(Trace, Errors) {
    EXPECT_THROW(trace_field_line({Source{1}}, {1, 1}, 1e-3, 1, false), SeedOnCone);
    EXPECT_THROW(trace_field_line({Source{1}}, {0, 0}, 1e-3, 1, false), Error);
}

TEST(Trace, StopsAtBoundingBox) {
    TraceOptions opt;
    opt.ds = 1e-2;
    opt.max_len = 100;
    opt.t_max = 4;
    FieldLine L = trace_field_line({Source{1}}, {2, 0.5}, opt);
    EXPECT_EQ(L.stop, StopReason::BoundingBox);
    EXPECT_LE(L.points.back().t, 4 + 1e-9);
}

TEST(Wave, BoundarySolution) {
    EXPECT_NEAR(wave_boundary_solution(1.5, 0.7, 1.5 * unit_psi1), 0.7, 1e-14);
    EXPECT_NEAR(wave_boundary_solution(1, 1, {2, 0}), 1 + std::log(4.0), 1e-15);
    EXPECT_THROW(wave_boundary_solution(1, 1, {0.5, 2}), DomainError);

    std::mt19937_64 rng(37);
    const double s = 1e-3;
    for (int k = 0; k < 50; ++k) {
        Double h = quadrant_one_point(rng);
        auto phi = [](double t, double x) { return wave_boundary_solution(1, 0, {t, x}); };
        double box = (phi(h.t + s, h.x) - 2 * phi(h.t, h.x) + phi(h.t - s, h.x)) / (s * s) -
                     (phi(h.t, h.x + s) - 2 * phi(h.t, h.x) + phi(h.t, h.x - s)) / (s * s);
        EXPECT_LT(std::fabs(box), 1e-6 / (h.t * h.t - h.x * h.x) + 1e-5);
    }
}

TEST(Multipole, ChargeAndDelta) {
    Multipole mp{3, 2, 1};
    EXPECT_EQ(multipole_charge(mp), Double(2, 1));
    EXPECT_NEAR(multipole_delta(mp), std::atanh(0.5), 1e-15);
    EXPECT_THROW(multipole_delta(Multipole{1, 1, 1}), DomainError);
}

TEST(Multipole, ClosedFormInIsotropicComponents) {
    std::mt19937_64 rng(38);
    for (int n = 1; n <= 5; ++n) {
        Double Q{1.2, -0.4};
        for (int k = 0; k < 10; ++k) {
            Double h = off_cone_point(rng);
            Isotropic xi = to_isotropic(h), q = to_isotropic(Q);
            double sgn = n % 2 == 1 ? 1 : -1;
            Double expect = from_isotropic({sgn * q.xi1 / std::pow(xi.xi1, n), sgn * q.xi2 / std::pow(xi.xi2, n)});
            EXPECT_LT(dist(multipole_closed_form(n, Q, h), expect), 1e-12 * std::max(1.0, dist(expect, {})));
        }
    }
}

TEST(Multipole, RecursionMatchesClosedForm) {
    std::mt19937_64 rng(39);
    std::vector<Double> charges{{1, 0.2}, {0.5, -0.1}, {2, 0.7}, {-1, 0.3}, {0.8, 0.1}};
    for (int k = 0; k < 20; ++k) {
        Double h = off_cone_point(rng);
        for (std::size_t n = 1; n <= charges.size(); ++n) {
            std::vector<Double> chain(charges.begin(), charges.begin() + n);
            Double closed = multipole_closed_form(static_cast<int>(n), charges[n - 1], h);
            double scale = std::max(1.0, dist(closed, {}));
            EXPECT_LT(dist(multipole_recursive(chain, h), closed) / scale, 1e-8) << "n = " << n << " at " << h;
        }
    }
}
