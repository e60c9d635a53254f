#include "dplane/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

Poly3 unit_vector(int i) {
    Poly3 e;
    e[i] = 1.0;
    return e;
}

Poly3 j_unit_poly(int k) {
    JBasisCoords x;
    x.x[k] = 1.0;
    return basis_convert(x);
}

double max_abs(const Poly3& p) { return std::max({std::fabs(p[0]), std::fabs(p[1]), std::fabs(p[2])}); }

void require_finite(const Poly3& p) {
    for (double v : p.a)
        if (!std::isfinite(v)) throw DomainError("map not finite on the differencing stencil");
}

}  // namespace

Poly3 operator+(const Poly3& x, const Poly3& y) { return {{x[0] + y[0], x[1] + y[1], x[2] + y[2]}}; }
Poly3 operator-(const Poly3& x, const Poly3& y) { return {{x[0] - y[0], x[1] - y[1], x[2] - y[2]}}; }
Poly3 operator*(const Poly3& x, const Poly3& y) { return {{x[0] * y[0], x[1] * y[1], x[2] * y[2]}}; }
Poly3 operator*(double s, const Poly3& x) { return {{s * x[0], s * x[1], s * x[2]}}; }

Poly3 operator/(const Poly3& x, const Poly3& y) {
    if (is_degenerate(y)) throw ZeroDivisor("division by a degenerate polynumber");
    return {{x[0] / y[0], x[1] / y[1], x[2] / y[2]}};
}

std::ostream& operator<<(std::ostream& os, const Poly3& p) {
    return os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ")";
}

Poly3 poly_arithmetic(const Poly3& x, const Poly3& y, PolyOp op) {
    switch (op) {
        case PolyOp::add: return x + y;
        case PolyOp::sub: return x - y;
        case PolyOp::mul: return x * y;
        case PolyOp::div: return x / y;
    }
    return {};
}

bool is_degenerate(const Poly3& x) { return x[0] == 0.0 || x[1] == 0.0 || x[2] == 0.0; }

Poly3 dagger(const Poly3& x) { return {{x[2], x[0], x[1]}}; }
Poly3 ddagger(const Poly3& x) { return {{x[1], x[2], x[0]}}; }
Conjugates conjugations(const Poly3& x) { return {dagger(x), ddagger(x)}; }

double pseudonorm(const Poly3& x) { return std::cbrt(x[0] * x[1] * x[2]); }

ExponentialAngles exp_and_angles(const Poly3& x) {
    if (is_degenerate(x)) throw DegenerateElement("exponential angles need all components nonzero");
    ExponentialAngles e;
    std::array<double, 3> L{};
    for (int i = 0; i < 3; ++i) {
        e.octant[i] = x[i] > 0 ? 1 : -1;
        L[i] = std::log(std::fabs(x[i]));
    }
    double mean = (L[0] + L[1] + L[2]) / 3.0;
    for (int i = 0; i < 3; ++i) e.chi[i] = L[i] - mean;
    e.norm = std::exp(mean);
    return e;
}

Poly3 from_angles(const ExponentialAngles& e) {
    Poly3 p;
    for (int i = 0; i < 3; ++i) p[i] = e.octant[i] * e.norm * std::exp(e.chi[i]);
    return p;
}

Poly3 exp_poly(const Poly3& x) {
    Poly3 r{{std::exp(x[0]), std::exp(x[1]), std::exp(x[2])}};
    for (double v : r.a)
        if (!std::isfinite(v)) throw Overflow("polynumber exponential overflows");
    return r;
}

Poly3 exp_series(const Poly3& x, int terms) {
    Poly3 sum, term = poly_unit;
    for (int k = 0; k < terms; ++k) {
        sum = sum + term;
        term = (1.0 / (k + 1)) * (term * x);
    }
    return sum;
}

double nproduct(const Poly3& a, const Poly3& b, const Poly3& c) {
    // rows in a canonical order, so every argument order rounds identically
    Matrix m{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]}};
    std::sort(m.begin(), m.end());
    return permanent_direct(m);
}

Poly3 nproduct_conjugation_sum(const Poly3& a, const Poly3& b, const Poly3& c) {
    std::array<const Poly3*, 3> args{&a, &b, &c};
    std::array<int, 3> idx{0, 1, 2};
    Poly3 sum;
    do {
        sum = sum + (*args[idx[0]]) * dagger(*args[idx[1]]) * ddagger(*args[idx[2]]);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

double tangent_metric(int j, const Poly3& u, const Poly3& v) {
    if (j < 1 || j > 3) throw DomainError("direction index must be 1, 2 or 3");
    if (u[j - 1] != 0.0 || v[j - 1] != 0.0)
        throw ComponentNotZero("tangent vectors must lie in the hyperplane of the direction");
    return nproduct(unit_vector(j - 1), u, v);
}

IndicatrixResult indicatrix_and_d2(const Poly3& a, const Poly3& sigma, double tol) {
    if (is_degenerate(sigma) || std::fabs(sigma[0] * sigma[1] * sigma[2] - 1.0) > tol)
        throw NotUnimodular("dilatation must satisfy sigma1 sigma2 sigma3 = 1");
    auto on = [tol](const Poly3& p) { return std::fabs(std::fabs(pseudonorm(p)) - 1.0) <= tol; };
    IndicatrixResult r;
    r.image = sigma * a;
    r.input_on = on(a);
    r.on_indicatrix = on(r.image);
    return r;
}

Poly3 basis_convert(const JBasisCoords& x) {
    return {{x[0] - x[1] - x[2], -x[0] + x[1] - x[2], -x[0] - x[1] + x[2]}};
}

JBasisCoords basis_convert(const Poly3& xi) {
    return {{-0.5 * (xi[1] + xi[2]), -0.5 * (xi[0] + xi[2]), -0.5 * (xi[0] + xi[1])}};
}

PolyPartials poly_partials(const PolyMap& F, const Poly3& at, double step) {
    std::array<Poly3, 3> D;
    for (int i = 0; i < 3; ++i) {
        Poly3 e = step * unit_vector(i);
        Poly3 fp = F(at + e), fm = F(at - e);
        require_finite(fp);
        require_finite(fm);
        D[i] = (1.0 / (2 * step)) * (fp - fm);
    }
    PolyPartials p;
    for (int k = 0; k < 3; ++k) {
        p.d_h[k] = D[k][k];
        p.d_hdag[k] = D[(k + 2) % 3][k];
        p.d_hddag[k] = D[(k + 1) % 3][k];
    }
    return p;
}

PolyPartials poly_partials_jbasis(const JMap& U, const JBasisCoords& at, double step) {
    std::array<Poly3, 3> P;
    Poly3 bar;
    for (int i = 0; i < 3; ++i) {
        JBasisCoords up = at, dn = at;
        up.x[i] += step;
        dn.x[i] -= step;
        Poly3 fp = basis_convert(U(up)), fm = basis_convert(U(dn));
        require_finite(fp);
        require_finite(fm);
        P[i] = (1.0 / (2 * step)) * (fp - fm);
        bar = bar + P[i];
    }
    PolyPartials r;
    for (int k = 0; k < 3; ++k) {
        Poly3 term = bar + P[k];
        r.d_h = r.d_h + 0.25 * (j_unit_poly(k) * term);
        r.d_hdag = r.d_hdag + 0.25 * (j_unit_poly((k + 1) % 3) * term);
        r.d_hddag = r.d_hddag + 0.25 * (j_unit_poly((k + 2) % 3) * term);
    }
    return r;
}

const char* holo_class_name(HoloClass c) {
    switch (c) {
        case HoloClass::H: return "h";
        case HoloClass::Hdag: return "h+";
        case HoloClass::Hddag: return "h++";
        case HoloClass::HHdag: return "hh+";
        case HoloClass::HHddag: return "hh++";
        case HoloClass::HdagHddag: return "h+h++";
    }
    return "?";
}

std::vector<HoloClass> holomorphy_class(const PolyMap& F, const std::vector<Poly3>& samples, double tol,
                                        double step) {
    if (samples.size() < 10) throw DomainError("classification needs at least ten sample points");
    bool zh = true, zdag = true, zddag = true;
    for (const Poly3& s : samples) {
        if (is_degenerate(s)) throw DomainError("sample point is degenerate");
        PolyPartials p = poly_partials(F, s, step);
        double scale = std::max({1.0, max_abs(p.d_h), max_abs(p.d_hdag), max_abs(p.d_hddag)});
        zh = zh && max_abs(p.d_h) <= tol * scale;
        zdag = zdag && max_abs(p.d_hdag) <= tol * scale;
        zddag = zddag && max_abs(p.d_hddag) <= tol * scale;
    }
    bool h = zdag && zddag, hd = zh && zddag, hdd = zh && zdag;
    std::vector<HoloClass> out;
    if (h) out.push_back(HoloClass::H);
    if (hd) out.push_back(HoloClass::Hdag);
    if (hdd) out.push_back(HoloClass::Hddag);
    if (zddag && !h && !hd) out.push_back(HoloClass::HHdag);
    if (zdag && !h && !hdd) out.push_back(HoloClass::HHddag);
    if (zh && !hd && !hdd) out.push_back(HoloClass::HdagHddag);
    return out;
}

double cr3_residual(const JMap& U, const Triple& at, double step) {
    // g[i][k] = dU_k / dx_i
    double g[3][3];
    double scale = 1.0;
    for (int i = 0; i < 3; ++i) {
        JBasisCoords up{at}, dn{at};
        up.x[i] += step;
        dn.x[i] -= step;
        JBasisCoords fp = U(up), fm = U(dn);
        for (int k = 0; k < 3; ++k) {
            g[i][k] = (fp[k] - fm[k]) / (2 * step);
            if (!std::isfinite(g[i][k])) throw DomainError("map not finite on the differencing stencil");
            scale = std::max(scale, std::fabs(g[i][k]));
        }
    }
    auto d = [&](int i, int k) { return g[i - 1][k - 1]; };
    auto bar = [&](int k) { return d(1, k) + d(2, k) + d(3, k); };
    const double rows[6] = {
        -(bar(1) + d(3, 1)) + (d(2, 2) - d(1, 2)) + (d(1, 3) - d(2, 3)),
        (d(2, 1) - d(3, 1)) - (bar(2) + d(1, 2)) + (d(3, 3) - d(2, 3)),
        (d(1, 1) - d(3, 1)) + (d(3, 2) - d(1, 2)) - (bar(3) + d(2, 3)),
        -(bar(1) + d(2, 1)) + (d(1, 2) - d(3, 2)) + (d(3, 3) - d(1, 3)),
        (d(1, 1) - d(2, 1)) - (bar(2) + d(3, 2)) + (d(2, 3) - d(1, 3)),
        (d(3, 1) - d(2, 1)) + (d(2, 2) - d(3, 2)) - (bar(3) + d(1, 3)),
    };
    double r = 0.0;
    for (double v : rows) r = std::max(r, std::fabs(v));
    return r / scale;
}

double delta3_residual(const TripleFn& U, const Triple& at, double step) {
    const Triple dirs[3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    double sum = 0.0;
    for (int sa = -1; sa <= 1; sa += 2)
        for (int sb = -1; sb <= 1; sb += 2)
            for (int sc = -1; sc <= 1; sc += 2) {
                Triple p = at;
                for (int i = 0; i < 3; ++i) p[i] += step * (sa * dirs[0][i] + sb * dirs[1][i] + sc * dirs[2][i]);
                double v = U(p);
                if (!std::isfinite(v)) throw DomainError("map not finite on the differencing stencil");
                sum += sa * sb * sc * v;
            }
    double third = sum / (8.0 * step * step * step);
    return -third / 8.0;
}

PolyN operator*(const PolyN& x, const PolyN& y) {
    if (x.a.size() != y.a.size()) throw DomainError("polynumbers of different dimension");
    PolyN r{std::vector<double>(x.a.size())};
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] * y.a[i];
    return r;
}

double pseudonorm_n(const PolyN& x) {
    if (x.a.empty()) throw DomainError("empty polynumber");
    double p = std::accumulate(x.a.begin(), x.a.end(), 1.0, std::multiplies<>());
    return std::copysign(std::pow(std::fabs(p), 1.0 / static_cast<double>(x.a.size())), p);
}

ExponentialAnglesN exp_and_angles_n(const PolyN& x) {
    ExponentialAnglesN e;
    std::size_t n = x.a.size();
    if (n == 0) throw DomainError("empty polynumber");
    std::vector<double> L(n);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.a[i] == 0.0) throw DegenerateElement("exponential angles need all components nonzero");
        e.octant.push_back(x.a[i] > 0 ? 1 : -1);
        L[i] = std::log(std::fabs(x.a[i]));
        mean += L[i];
    }
    mean /= static_cast<double>(n);
    for (double l : L) e.chi.push_back(l - mean);
    e.norm = std::exp(mean);
    return e;
}

double permanent_direct(const Matrix& m) {
    std::size_t n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    double sum = 0.0;
    do {
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) prod *= m[i][p[i]];
        sum += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

double permanent_ryser(const Matrix& m) {
    std::size_t n = m.size();
    if (n == 0) return 1.0;
    if (n > 30) throw DomainError("matrix too large for Ryser's formula");
    double total = 0.0;
    for (unsigned long s = 1; s < (1UL << n); ++s) {
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (s & (1UL << j)) row += m[i][j];
            prod *= row;
        }
        int bits = __builtin_popcountl(s);
        total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
    }
    return total;
}

double permanent(const Matrix& m) { return m.size() <= 4 ? permanent_direct(m) : permanent_ryser(m); }

double nproduct_n(const std::vector<PolyN>& rows) {
    Matrix m;
    for (const auto& r : rows) {
        if (r.a.size() != rows.size()) throw DomainError("n-product needs n elements of P_n");
        m.push_back(r.a);
    }
    return permanent(m);
}

}  // namespace dplane
