#pragma once

#include <iosfwd>
#include <vector>

namespace dplane {

// Double (split-complex) number t + jx with j*j = 1.
struct Double {
    double t = 0.0;
    double x = 0.0;

    constexpr Double() = default;
    constexpr Double(double t_) : t(t_) {}
    constexpr Double(double t_, double x_) : t(t_), x(x_) {}

    constexpr Double& operator+=(const Double& o) { t += o.t; x += o.x; return *this; }
    constexpr Double& operator-=(const Double& o) { t -= o.t; x -= o.x; return *this; }
    constexpr Double& operator*=(double s) { t *= s; x *= s; return *this; }

    friend constexpr bool operator==(const Double&, const Double&) = default;
};

inline constexpr Double j_unit{0.0, 1.0};

constexpr Double operator+(Double a, const Double& b) { return a += b; }
constexpr Double operator-(Double a, const Double& b) { return a -= b; }
constexpr Double operator-(const Double& a) { return {-a.t, -a.x}; }
constexpr Double operator*(const Double& a, const Double& b) {
    return {a.t * b.t + a.x * b.x, a.t * b.x + a.x * b.t};
}
constexpr Double operator*(double s, const Double& a) { return {s * a.t, s * a.x}; }
constexpr Double operator*(const Double& a, double s) { return {s * a.t, s * a.x}; }
constexpr Double operator/(const Double& a, double s) { return {a.t / s, a.x / s}; }
// Throws ZeroDivisor when b lies on the light cone.
Double operator/(const Double& a, const Double& b);

std::ostream& operator<<(std::ostream& os, const Double& h);

// Coordinates in the idempotent basis e1 = (1+j)/2, e2 = (1-j)/2.
struct Isotropic {
    double xi1 = 0.0;
    double xi2 = 0.0;
    friend constexpr bool operator==(const Isotropic&, const Isotropic&) = default;
};

constexpr Isotropic to_isotropic(const Double& h) { return {h.t + h.x, h.t - h.x}; }
constexpr Double from_isotropic(const Isotropic& q) {
    return {0.5 * (q.xi1 + q.xi2), 0.5 * (q.xi1 - q.xi2)};
}

enum class Region { QuadrantI, QuadrantII, QuadrantIII, QuadrantIV, ConePlus, ConeMinus, Origin };

const char* region_name(Region r);
constexpr bool is_quadrant(Region r) {
    return r == Region::QuadrantI || r == Region::QuadrantII || r == Region::QuadrantIII ||
           r == Region::QuadrantIV;
}

inline constexpr double default_cone_eps = 1e-14;

// Exact classification: a cone point has an isotropic coordinate equal to zero.
Region region_of(const Double& h);
// Tolerant classification for computed values: |xi_i| <= eps * max(|t|, |x|) counts as zero.
Region region_of(const Double& h, double eps_cone);
bool on_cone(const Double& h);
bool on_cone(const Double& h, double eps_cone);

// The sign factor epsilon in {1, j, -1, -j}; throws OnCone for cone regions.
Double sign_factor(Region r);

struct PolarForm {
    Region region = Region::QuadrantI;
    double rho = 1.0;
    double psi = 0.0;
};

enum class ArithOp { add, sub, mul, div };

Double arithmetic(const Double& a, const Double& b, ArithOp op);
constexpr Double conj(const Double& h) { return {h.t, -h.x}; }
constexpr double norm_sq(const Double& h) { return h.t * h.t - h.x * h.x; }

PolarForm polar_decompose(const Double& h);
Double from_polar(const PolarForm& p);

Double exp(const Double& h);
Double ln(const Double& h);

struct RegionLn {
    Region region;
    Double value;  // ln of the quadrant-I representative h / epsilon
};
RegionLn ln_with_region(const Double& h);

Double pow_int(const Double& h, int n);
Double pow_real(const Double& h, double alpha);
// Every r with r^n = h; even n gives quadrant order I, II, III, IV.
std::vector<Double> sqrt_all(const Double& h, int n);
Double zhukowskij(const Double& h);

}  // namespace dplane
