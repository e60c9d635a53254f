#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

namespace dplane {

// Polynumber of P3 in the isotropic basis e1, e2, e3; multiplication is componentwise.
struct Poly3 {
    std::array<double, 3> a{0.0, 0.0, 0.0};

    double& operator[](int i) { return a[i]; }
    double operator[](int i) const { return a[i]; }
    friend bool operator==(const Poly3&, const Poly3&) = default;
};

inline const Poly3 poly_unit{{1.0, 1.0, 1.0}};

Poly3 operator+(const Poly3& x, const Poly3& y);
Poly3 operator-(const Poly3& x, const Poly3& y);
Poly3 operator*(const Poly3& x, const Poly3& y);
Poly3 operator*(double s, const Poly3& x);
// Throws ZeroDivisor for a degenerate divisor.
Poly3 operator/(const Poly3& x, const Poly3& y);
std::ostream& operator<<(std::ostream& os, const Poly3& p);

enum class PolyOp { add, sub, mul, div };
Poly3 poly_arithmetic(const Poly3& x, const Poly3& y, PolyOp op);
bool is_degenerate(const Poly3& x);

Poly3 dagger(const Poly3& x);   // (A3, A1, A2)
Poly3 ddagger(const Poly3& x);  // (A2, A3, A1)
struct Conjugates {
    Poly3 dagger;
    Poly3 ddagger;
};
Conjugates conjugations(const Poly3& x);

// Signed cube root of A1 A2 A3.
double pseudonorm(const Poly3& x);

struct ExponentialAngles {
    std::array<double, 3> chi{};
    double norm = 1.0;                 // norm of the positive-octant representative
    std::array<int, 3> octant{1, 1, 1};  // sign pattern I_(j)
};
// Throws DegenerateElement when a component vanishes.
ExponentialAngles exp_and_angles(const Poly3& x);
Poly3 from_angles(const ExponentialAngles& e);

// Throws Overflow when a component overflows.
Poly3 exp_poly(const Poly3& x);
// Partial sum of the exponential series with the given number of terms.
Poly3 exp_series(const Poly3& x, int terms);

// Permanent of the matrix with rows a, b, c.
double nproduct(const Poly3& a, const Poly3& b, const Poly3& c);
// Sum over the six orderings (X, Y, Z) of (a, b, c) of X Y-dagger Z-ddagger; equals nproduct * I.
Poly3 nproduct_conjugation_sum(const Poly3& a, const Poly3& b, const Poly3& c);

// 3G(e_j, u, v) for j in 1..3; throws ComponentNotZero unless u_j = v_j = 0.
double tangent_metric(int j, const Poly3& u, const Poly3& v);

struct IndicatrixResult {
    bool input_on = false;     // |(a1 a2 a3)^(1/3)| = 1
    bool on_indicatrix = false;  // same test for the image
    Poly3 image;
};
// Throws NotUnimodular unless sigma1 sigma2 sigma3 = 1 within 1e-12.
IndicatrixResult indicatrix_and_d2(const Poly3& a, const Poly3& sigma, double tol = 1e-12);

// Coordinates in the basis j1 = e1 - e2 - e3, j2 = -e1 + e2 - e3, j3 = -e1 - e2 + e3.
struct JBasisCoords {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    double operator[](int i) const { return x[i]; }
    friend bool operator==(const JBasisCoords&, const JBasisCoords&) = default;
};

Poly3 basis_convert(const JBasisCoords& x);
JBasisCoords basis_convert(const Poly3& xi);

using PolyMap = std::function<Poly3(const Poly3&)>;
using JMap = std::function<JBasisCoords(const JBasisCoords&)>;
using Triple = std::array<double, 3>;
using TripleFn = std::function<double(const Triple&)>;

struct PolyPartials {
    Poly3 d_h;
    Poly3 d_hdag;
    Poly3 d_hddag;
};

// Isotropic route: central differences in xi assembled with the cyclic patterns.
PolyPartials poly_partials(const PolyMap& F, const Poly3& at, double step);
// j-basis route: (1/4) sum_k j_k (dbar + d_k) and its two conjugate forms,
// with x-coordinate central differences. Results are in the isotropic basis.
PolyPartials poly_partials_jbasis(const JMap& U, const JBasisCoords& at, double step);

enum class HoloClass { H, Hdag, Hddag, HHdag, HHddag, HdagHddag };
const char* holo_class_name(HoloClass c);

// Classes whose vanishing conditions hold at every sample, dropping a
// two-variable class when a one-variable class that implies it holds.
std::vector<HoloClass> holomorphy_class(const PolyMap& F, const std::vector<Poly3>& samples, double tol = 1e-6,
                                        double step = 1e-5);

// Max residual over the six rows of both operator systems for (U1, U2, U3),
// divided by max(1, max |dU_k/dx_i|).
double cr3_residual(const JMap& U, const Triple& at, double step);
// -(1/8)(d1+d2)(d2+d3)(d3+d1) U by an eight-point stencil.
double delta3_residual(const TripleFn& U, const Triple& at, double step);

// P_n with runtime n.
struct PolyN {
    std::vector<double> a;
};
PolyN operator*(const PolyN& x, const PolyN& y);
// Sign of the product times |product|^(1/n).
double pseudonorm_n(const PolyN& x);
struct ExponentialAnglesN {
    std::vector<double> chi;
    double norm = 1.0;
    std::vector<int> octant;
};
ExponentialAnglesN exp_and_angles_n(const PolyN& x);

using Matrix = std::vector<std::vector<double>>;
double permanent_direct(const Matrix& m);
double permanent_ryser(const Matrix& m);
// Direct expansion for n <= 4, Ryser otherwise.
double permanent(const Matrix& m);
// Permanent of the matrix whose rows are the given elements.
double nproduct_n(const std::vector<PolyN>& rows);

}  // namespace dplane
