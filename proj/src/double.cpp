#include "dplane/double.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

Region classify(double xi1, double xi2) {
    if (xi1 == 0.0 && xi2 == 0.0) return Region::Origin;
    if (xi2 == 0.0) return Region::ConePlus;
    if (xi1 == 0.0) return Region::ConeMinus;
    if (xi1 > 0.0) return xi2 > 0.0 ? Region::QuadrantI : Region::QuadrantII;
    return xi2 < 0.0 ? Region::QuadrantIII : Region::QuadrantIV;
}

// Signs of the isotropic coordinates of epsilon for each quadrant.
void sign_pair(Region r, double& s1, double& s2) {
    switch (r) {
        case Region::QuadrantI: s1 = 1; s2 = 1; return;
        case Region::QuadrantII: s1 = 1; s2 = -1; return;
        case Region::QuadrantIII: s1 = -1; s2 = -1; return;
        case Region::QuadrantIV: s1 = -1; s2 = 1; return;
        default: throw OnCone("sign factor undefined on the light cone");
    }
}

double root_n(double v, int n) {
    if (n == 2) return std::sqrt(v);
    if (n == 3) return std::cbrt(v);
    return std::copysign(std::pow(std::fabs(v), 1.0 / n), v);
}

}  // namespace

Double operator/(const Double& a, const Double& b) {
    Isotropic ib = to_isotropic(b);
    if (ib.xi1 == 0.0 || ib.xi2 == 0.0) throw ZeroDivisor("division by a zero divisor");
    Isotropic ia = to_isotropic(a);
    return from_isotropic({ia.xi1 / ib.xi1, ia.xi2 / ib.xi2});
}

std::ostream& operator<<(std::ostream& os, const Double& h) {
    return os << h.t << (std::signbit(h.x) ? " - j" : " + j") << std::fabs(h.x);
}

const char* region_name(Region r) {
    switch (r) {
        case Region::QuadrantI: return "I";
        case Region::QuadrantII: return "II";
        case Region::QuadrantIII: return "III";
        case Region::QuadrantIV: return "IV";
        case Region::ConePlus: return "cone+";
        case Region::ConeMinus: return "cone-";
        case Region::Origin: return "origin";
    }
    return "?";
}

Region region_of(const Double& h) {
    Isotropic q = to_isotropic(h);
    return classify(q.xi1, q.xi2);
}

Region region_of(const Double& h, double eps_cone) {
    Isotropic q = to_isotropic(h);
    double tol = eps_cone * std::max(std::fabs(h.t), std::fabs(h.x));
    return classify(std::fabs(q.xi1) <= tol ? 0.0 : q.xi1, std::fabs(q.xi2) <= tol ? 0.0 : q.xi2);
}

bool on_cone(const Double& h) { return !is_quadrant(region_of(h)); }
bool on_cone(const Double& h, double eps_cone) { return !is_quadrant(region_of(h, eps_cone)); }

Double sign_factor(Region r) {
    double s1, s2;
    sign_pair(r, s1, s2);
    return from_isotropic({s1, s2});
}

Double arithmetic(const Double& a, const Double& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    return {};
}

PolarForm polar_decompose(const Double& h) {
    Isotropic q = to_isotropic(h);
    Region r = classify(q.xi1, q.xi2);
    if (!is_quadrant(r)) throw OnCone("polar form undefined on the light cone");
    double a1 = std::fabs(q.xi1), a2 = std::fabs(q.xi2);
    // the split root only where the product would leave the normal range
    double p = a1 * a2;
    double rho = std::isnormal(p) && std::isfinite(p) ? std::sqrt(p) : std::sqrt(a1) * std::sqrt(a2);
    return {r, rho, 0.5 * (std::log(a1) - std::log(a2))};
}

Double from_polar(const PolarForm& p) {
    double s1, s2;
    sign_pair(p.region, s1, s2);
    return from_isotropic({s1 * p.rho * std::exp(p.psi), s2 * p.rho * std::exp(-p.psi)});
}

Double exp(const Double& h) {
    Isotropic q = to_isotropic(h);
    Double r = from_isotropic({std::exp(q.xi1), std::exp(q.xi2)});
    if (!std::isfinite(r.t) || !std::isfinite(r.x)) throw Overflow("exp overflows the floating range");
    return r;
}

Double ln(const Double& h) {
    Isotropic q = to_isotropic(h);
    if (!(q.xi1 > 0.0 && q.xi2 > 0.0)) throw DomainError("ln is defined only in the open first quadrant");
    return from_isotropic({std::log(q.xi1), std::log(q.xi2)});
}

RegionLn ln_with_region(const Double& h) {
    Isotropic q = to_isotropic(h);
    Region r = classify(q.xi1, q.xi2);
    if (!is_quadrant(r)) throw DomainError("ln undefined on the light cone");
    return {r, from_isotropic({std::log(std::fabs(q.xi1)), std::log(std::fabs(q.xi2))})};
}

Double pow_int(const Double& h, int n) {
    Isotropic q = to_isotropic(h);
    if (n < 0 && (q.xi1 == 0.0 || q.xi2 == 0.0)) throw ZeroDivisor("negative power of a zero divisor");
    return from_isotropic({std::pow(q.xi1, n), std::pow(q.xi2, n)});
}

Double pow_real(const Double& h, double alpha) {
    Isotropic q = to_isotropic(h);
    if (!(q.xi1 > 0.0 && q.xi2 > 0.0)) throw DomainError("real power needs the open first quadrant");
    return from_isotropic({std::pow(q.xi1, alpha), std::pow(q.xi2, alpha)});
}

std::vector<Double> sqrt_all(const Double& h, int n) {
    if (n < 2) throw DomainError("root order must be at least 2");
    Isotropic q = to_isotropic(h);
    if (n % 2 == 1) return {from_isotropic({root_n(q.xi1, n), root_n(q.xi2, n)})};
    if (q.xi1 < 0.0 || q.xi2 < 0.0) throw DomainError("even root outside the first quadrant");
    double a = root_n(q.xi1, n), b = root_n(q.xi2, n);
    const Region order[] = {Region::QuadrantI, Region::QuadrantII, Region::QuadrantIII,
                            Region::QuadrantIV};
    std::vector<Double> out;
    for (Region r : order) {
        double s1, s2;
        sign_pair(r, s1, s2);
        Double c = from_isotropic({s1 * a, s2 * b});
        bool seen = false;
        for (const Double& o : out) seen = seen || o == c;
        if (!seen) out.push_back(c);
    }
    return out;
}

Double zhukowskij(const Double& h) { return 0.5 * (h + Double{1.0} / h); }

}  // namespace dplane
