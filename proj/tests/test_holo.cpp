#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dplane/double.hpp"
#include "dplane/errors.hpp"
#include "dplane/holo.hpp"

using namespace dplane;

namespace {

HFunction plain(std::string name, DMap eval) { return HFunction{std::move(name), std::move(eval), {}, {}}; }

HFunction identity_fn() {
    return HFunction{"id", [](const Double& h) { return h; }, [](const Double&) { return Double{1}; }, {}};
}

HFunction square_fn() {
    return HFunction{"sq", [](const Double& h) { return h * h; }, [](const Double& h) { return 2.0 * h; }, {}};
}

double dist(const Double& a, const Double& b) { return std::max(std::fabs(a.t - b.t), std::fabs(a.x - b.x)); }

// Random point of the box [-2, 2]^2 at least `margin` away from the cone.
Double off_cone_point(std::mt19937_64& rng, double margin = 0.2) {
    std::uniform_real_distribution<double> u(-2, 2);
    for (;;) {
        Double h{u(rng), u(rng)};
        if (std::fabs(std::fabs(h.t) - std::fabs(h.x)) > margin) return h;
    }
}

}  // namespace

TEST(Wirtinger, Generators) {
    Wirtinger w = wirtinger(make_jet(identity_fn(), {0.7, -0.2}));
    EXPECT_LT(dist(w.d_h, {1, 0}), 1e-10);
    EXPECT_LT(dist(w.d_hbar, {0, 0}), 1e-10);

    w = wirtinger(make_jet(plain("conj", [](const Double& h) { return conj(h); }), {0.7, -0.2}));
    EXPECT_LT(dist(w.d_h, {0, 0}), 1e-10);
    EXPECT_LT(dist(w.d_hbar, {1, 0}), 1e-10);
}

TEST(Wirtinger, SquareAtTwoPlusJ) {
    Wirtinger w = wirtinger(make_jet(square_fn(), {2, 1}, 1e-5));
    EXPECT_LT(dist(w.d_h, {4, 2}), 1e-8);
    EXPECT_LT(dist(w.d_hbar, {0, 0}), 1e-8);
}

TEST(Jet, RichardsonConsistency) {
    HFunction cube = plain("cube", [](const Double& h) { return h * h * h; });
    Double h{1.3, 0.4};
    Double d = 3.0 * h * h;  // F'(h); d_t = F', d_x = j F'
    double e1 = dist(make_jet(cube, h, 1e-2).d_t, d);
    double e2 = dist(make_jet(cube, h, 5e-3).d_t, d);
    EXPECT_NEAR(e1 / e2, 4.0, 0.05);
    double f1 = dist(make_jet(cube, h, 1e-2).d_x, j_unit * d);
    double f2 = dist(make_jet(cube, h, 5e-3).d_x, j_unit * d);
    EXPECT_NEAR(f1 / f2, 4.0, 0.05);
}

TEST(Jet, AnalyticDerivativeAgreesWithDifferences) {
    std::mt19937_64 rng(11);
    for (const auto& f : catalog()) {
        if (!f.has_deriv()) continue;
        int n = 0;
        while (n < 100) {
            Double h = off_cone_point(rng);
            if (!f.contains(h)) continue;
            ++n;
            const double s = 1e-4;
            Double fd = (f(h + Double{s}) - f(h - Double{s})) / (2 * s);
            Double d = f.deriv(h);
            double scale = std::max(1.0, std::max(std::fabs(d.t), std::fabs(d.x)));
            EXPECT_LT(dist(fd, d) / scale, 1e-6) << f.name << " at " << h;
        }
    }
}

TEST(CauchyRiemann, Examples) {
    EXPECT_LT(cr_residual(square_fn(), {2, 1}, 1e-5), 1e-9);
    EXPECT_NEAR(cr_residual(plain("conj", [](const Double& h) { return conj(h); }), {1, 0}), 2.0, 1e-9);
    EXPECT_LT(cr_residual(exp_function(), {0.3, 0.1}, 1e-5), 1e-9);
}

TEST(CauchyRiemann, StencilOutsideDomainThrows) {
    HFunction f = ln_function();
    EXPECT_THROW(cr_residual(f, {1.0, 1.0 - 1e-7}), DomainError);
    EXPECT_THROW(cr_residual(f, {-2.0, 0.5}), DomainError);
}

TEST(Wave, Examples) {
    EXPECT_LT(wave_residual(square_fn(), {0.4, -1.7}, 1e-3), 1e-6);
    EXPECT_LT(wave_residual(ln_function(), {2, 0.5}), 1e-5);

    // harmonic in t and x separately but not h-holomorphic
    HFunction euclid = plain("t2+x2", [](const Double& h) { return Double{h.t * h.t + h.x * h.x}; });
    EXPECT_LT(wave_residual(euclid, {0.8, 0.3}, 1e-3), 1e-6);
    EXPECT_GT(cr_residual(euclid, {0.8, 0.3}), 0.1);
}

TEST(Catalog, ResidualsWithinTolerance) {
    std::mt19937_64 rng(12);
    const double step = 1e-3;
    for (const auto& f : catalog()) {
        int n = 0;
        double cr = 0, wave = 0;
        while (n < 100) {
            Double h = off_cone_point(rng, 0.3);
            if (!f.contains(h)) continue;
            ++n;
            cr = std::max(cr, cr_residual(f, h, step));
            wave = std::max(wave, wave_residual(f, h, step));
        }
        EXPECT_LT(cr, 10 * step * step) << f.name;
        EXPECT_LT(wave, 100 * step * step) << f.name;
    }
}

TEST(Catalog, DerivativeOfHolomorphicIsHolomorphic) {
    const double d = 1e-5;
    HFunction deriv = plain("d cube", [d](const Double& h) {
        auto c = [](const Double& z) { return z * z * z; };
        return (c(h + Double{d}) - c(h - Double{d})) / (2 * d);
    });
    std::mt19937_64 rng(13);
    for (int k = 0; k < 20; ++k) {
        const double step = 1e-3;
        EXPECT_LT(cr_residual(deriv, off_cone_point(rng), step), 10 * step);
    }
}

TEST(Catalog, PowersPreserveTheCone) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 1; n <= 5; ++n) {
        HFunction f = power_function(n);
        for (int k = 0; k < 50; ++k) {
            double a = u(rng);
            Double plus = f({a, a}), minus = f({a, -a});
            EXPECT_EQ(plus.t, plus.x);
            EXPECT_EQ(minus.t, -minus.x);
        }
    }
}

TEST(Conformal, Factor) {
    EXPECT_NEAR(conformal_factor(identity_fn(), {0.3, 2.0}), 1.0, 1e-12);
    EXPECT_NEAR(conformal_factor(square_fn(), {2, 1}), 12.0, 1e-9);
}

TEST(Conformal, FactorMatchesJacobian) {
    std::mt19937_64 rng(15);
    HFunction f = square_fn();
    for (int k = 0; k < 20; ++k) {
        Double h = off_cone_point(rng);
        // Jacobian of (t^2 + x^2, 2 t x): 4 (t^2 - x^2)
        EXPECT_NEAR(conformal_factor(f, h), 4 * (h.t * h.t - h.x * h.x), 1e-9);
        EXPECT_NEAR(conformal_factor(f, h), jacobian_det(f, h), 1e-6);
    }
}

TEST(Conformal, CompositionMultipliesFactors) {
    HFunction f = exp_function(), g = square_fn();
    HFunction fg = compose(f, g);
    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int k = 0; k < 20; ++k) {
        Double h{u(rng), u(rng)};
        double lhs = conformal_factor(fg, h);
        double rhs = conformal_factor(f, g(h)) * conformal_factor(g, h);
        EXPECT_NEAR(lhs, rhs, 1e-8 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST(LevelCurves, Orthogonality) {
    EXPECT_LT(std::fabs(level_orthogonality(square_fn(), {1, 0.3})), 1e-9);
    EXPECT_LT(std::fabs(level_orthogonality(ln_function(), {2, 0})), 1e-9);
    // U = t^2 + x^2, V = t: grad U . grad V = 2t
    HFunction g = plain("mixed", [](const Double& h) { return Double{h.t * h.t + h.x * h.x, h.t}; });
    EXPECT_NEAR(level_orthogonality(g, {1, 0.5}), 2.0, 1e-6);
}

TEST(Isotropic, IdentityMap) {
    RealMap id{[](double u) { return u; }, [](double) { return 1.0; }};
    IsotropicMap m = conformal_isotropic(id, id);
    Double h{0.4, -1.1};
    EXPECT_LT(dist(m.map(h), h), 1e-15);
    EXPECT_DOUBLE_EQ(m.factor(h), 1.0);
}

TEST(Isotropic, CubeTimesIdentityFactor) {
    RealMap cube{[](double u) { return u * u * u; }, [](double u) { return 3 * u * u; }};
    RealMap id{[](double v) { return v; }, [](double) { return 1.0; }};
    IsotropicMap m = conformal_isotropic(cube, id);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        Double h = off_cone_point(rng);
        Isotropic xi = to_isotropic(h);
        EXPECT_NEAR(m.factor(h), 3 * xi.xi1 * xi.xi1, 1e-12);
        EXPECT_NEAR(m.factor(h), jacobian_det(m.map, h), 1e-6 * std::max(1.0, m.factor(h)));
    }
}

TEST(Isotropic, MixedComponentsBreakConjugationSymmetry) {
    // each component depends on one isotropic variable only, so the CR system
    // holds; what fails is F(conj h) = conj F(h), required of a single real series
    RealMap e{[](double u) { return std::exp(u); }, {}};
    RealMap sq{[](double v) { return v * v; }, {}};
    IsotropicMap m = conformal_isotropic(e, sq);
    Double h{0.7, 0.2};
    EXPECT_LT(cr_residual(m.map, h, 1e-4), 1e-7);
    EXPECT_GT(dist(m.map(conj(h)), conj(m.map(h))), 0.1);

    // matching components reproduce the holomorphic map
    RealMap e2{[](double u) { return std::exp(u); }, {}};
    IsotropicMap same = conformal_isotropic(e2, e2);
    EXPECT_LT(dist(same.map({0.7, 0.2}), exp({0.7, 0.2})), 1e-14);
}

TEST(KleinGordon, Examples) {
    auto zero = [](const Double&) { return Double{}; };
    Double r = klein_gordon_residual(square_fn(), 0, zero, {0.5, 0.2});
    EXPECT_LT(std::max(std::fabs(r.t), std::fabs(r.x)), 1e-6);
    r = klein_gordon_residual(exp_function(), 0, zero, {0.2, 0.1});
    EXPECT_LT(std::max(std::fabs(r.t), std::fabs(r.x)), 1e-5);
    HFunction cos_t = plain("cos t", [](const Double& h) { return Double{std::cos(h.t)}; });
    r = klein_gordon_residual(cos_t, 1, zero, {0.4, 1.3});
    EXPECT_LT(std::max(std::fabs(r.t), std::fabs(r.x)), 1e-6);
    // the source term enters additively
    r = klein_gordon_residual(cos_t, 1, [](const Double&) { return Double{2, -1}; }, {0.4, 1.3});
    EXPECT_NEAR(r.t, 2, 1e-6);
    EXPECT_NEAR(r.x, -1, 1e-6);
}
