#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/csv.hpp"
#include "cli/svg.hpp"
#include "cli/verify.hpp"
#include "dplane/contour.hpp"
#include "dplane/errors.hpp"
#include "dplane/fields.hpp"
#include "dplane/holo.hpp"
#include "dplane/poly.hpp"
#include "dplane/srt.hpp"

namespace dplane::cli {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string point_text(const Double& h) { return "(" + format_double(h.t) + ", " + format_double(h.x) + ")"; }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + path + "'");
    f << text;
}

PotentialSpec potential_from(const RunConfig& cfg) {
    const std::string name = cfg.get("potential", "source");
    PotentialSpec spec;
    if (name == "source") spec = {Source{cfg.get_double("q", 1.0)}};
    else if (name == "vortex") spec = {Vortex{cfg.get_double("m", 1.0)}};
    else if (name == "vortex-source") spec = {VortexSource{cfg.get_double("q", 1.0), cfg.get_double("m", 1.0)}};
    else if (name == "multipole")
        spec = {Multipole{cfg.get_int("n", 1), cfg.get_double("qe", 1.0), cfg.get_double("qm", 0.0)}};
    else if (name == "cylinder") spec = {CylinderUniform{cfg.get_double("e0", 1.0), cfg.get_double("R", 1.0)}};
    else throw ConfigError("unknown potential '" + name + "'; expected source, vortex, vortex-source, multipole or cylinder");
    try {
        validate(spec);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

BBox bbox_from(const RunConfig& cfg, BBox fallback) {
    if (!cfg.has("bbox")) return fallback;
    auto v = cfg.get_list("bbox", {});
    if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3])) throw ConfigError("--bbox expects tmin,tmax,xmin,xmax");
    return {v[0], v[1], v[2], v[3]};
}

Region quadrant_from(const std::string& q) {
    if (q == "I") return Region::QuadrantI;
    if (q == "II") return Region::QuadrantII;
    if (q == "III") return Region::QuadrantIII;
    if (q == "IV") return Region::QuadrantIV;
    throw ConfigError("unknown quadrant '" + q + "'; expected I, II, III or IV");
}

Poly3 poly_from(const RunConfig& cfg, const std::string& key) {
    if (!cfg.has(key)) throw ConfigError("--" + key + " is required for this operation");
    auto v = cfg.get_list(key, {});
    if (v.size() != 3) throw ConfigError("--" + key + " expects three components");
    return {{v[0], v[1], v[2]}};
}

std::string poly_text(const Poly3& p) {
    return "(" + format_double(p[0]) + ", " + format_double(p[1]) + ", " + format_double(p[2]) + ")";
}

BBox data_box(const std::vector<Polyline>& lines) {
    BBox b{HUGE_VAL, -HUGE_VAL, HUGE_VAL, -HUGE_VAL};
    for (const auto& L : lines)
        for (const auto& p : L.points) {
            b.t_min = std::min(b.t_min, p.t);
            b.t_max = std::max(b.t_max, p.t);
            b.x_min = std::min(b.x_min, p.x);
            b.x_max = std::max(b.x_max, p.x);
        }
    double pad = 0.05 * std::max({b.t_max - b.t_min, b.x_max - b.x_min, 1e-9});
    return {b.t_min - pad, b.t_max + pad, b.x_min - pad, b.x_max + pad};
}

HFunction render_map(const std::string& name) {
    if (name == "square") return power_function(2);
    if (name == "cube") return power_function(3);
    if (name == "inverse") return power_function(-1);
    if (name == "exp") return exp_function();
    if (name == "zhukowskij") return zhukowskij_function();
    throw ConfigError("unknown map '" + name + "'; expected square, cube, inverse, exp or zhukowskij");
}

int render_wave(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const double R = cfg.get_double("R", 1.0), phi0 = cfg.get_double("phi0", 1.0);
    if (!(R > 0)) throw ConfigError("--R must be positive");
    auto slices = cfg.get_list("slices", {1, 2, 3, 4});
    const int n = 200;
    std::vector<Polyline> curves;
    std::ostringstream csv;
    csv << "t,x,value\n";
    for (double t : slices) {
        if (!(t > 0)) throw ConfigError("wave slices need t > 0");
        // stay inside the timelike region |x| < t
        const double a = 0.99 * t;
        Polyline c{"t=" + format_double(t), {}};
        for (int k = 0; k <= n; ++k) {
            double x = -a + 2 * a * k / n;
            double v = wave_boundary_solution(R, phi0, {t, x});
            c.points.push_back({v, x});
            csv << format_double(t) << ',' << format_double(x) << ',' << format_double(v) << '\n';
        }
        curves.push_back(std::move(c));
    }
    SvgOptions opt;
    opt.cone = false;
    opt.title = "wave solution time slices";
    emit(cfg.output_path, render_svg(curves, data_box(curves), opt), out);
    if (cfg.has("csv")) emit(cfg.get("csv", ""), csv.str(), out);
    err << "value at (2, 0) = " << format_double(wave_boundary_solution(R, phi0, {2.0, 0.0})) << '\n';
    return exit_ok;
}

int render_net(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    HFunction F = render_map(cfg.get("map", "square"));
    Region quad = quadrant_from(cfg.get("quadrant", "I"));
    auto rr = cfg.get_list("rho-range", {0.5, 2.0});
    auto pr = cfg.get_list("psi-range", {-1.0, 1.0});
    const int lines = cfg.get_int("lines", 9);
    if (rr.size() != 2 || !(0 < rr[0] && rr[0] < rr[1])) throw ConfigError("--rho-range expects 0 < min < max");
    if (pr.size() != 2 || !(pr[0] < pr[1])) throw ConfigError("--psi-range expects min < max");
    if (lines < 2) throw ConfigError("--lines must be at least 2");
    const int n = 100;
    auto point = [&](double rho, double psi) { return from_polar({quad, rho, psi}); };
    auto rho_at = [&](int i) { return rr[0] + (rr[1] - rr[0]) * i / (lines - 1); };
    auto psi_at = [&](int i) { return pr[0] + (pr[1] - pr[0]) * i / (lines - 1); };

    std::vector<Polyline> net;
    for (int i = 0; i < lines; ++i) {
        Polyline a{"rho-" + std::to_string(i), {}}, b{"psi-" + std::to_string(i), {}};
        for (int k = 0; k <= n; ++k) {
            a.points.push_back(F(point(rho_at(i), pr[0] + (pr[1] - pr[0]) * k / n)));
            b.points.push_back(F(point(rr[0] + (rr[1] - rr[0]) * k / n, psi_at(i))));
        }
        net.push_back(std::move(a));
        net.push_back(std::move(b));
    }

    // Angle defect of the image curves at every node, in the pseudo-metric.
    const double d = 1e-5;
    double defect = 0.0;
    for (int i = 0; i < lines; ++i)
        for (int k = 0; k < lines; ++k) {
            double rho = rho_at(i), psi = psi_at(k);
            Double a = F(point(rho * (1 + d), psi)) - F(point(rho * (1 - d), psi));
            Double b = F(point(rho, psi + d)) - F(point(rho, psi - d));
            double scale = std::hypot(a.t, a.x) * std::hypot(b.t, b.x);
            defect = std::max(defect, std::fabs(star(a, b)) / scale);
        }

    SvgOptions opt;
    opt.title = "image of the polar net under " + F.name;
    emit(cfg.output_path, render_svg(net, data_box(net), opt), out);
    err << "orthogonality defect = " << fmt("%.3e", defect) << '\n';
    if (!(defect < 1e-3)) {
        err << "numerical failure: orthogonality defect exceeds 1e-3\n";
        return exit_numeric;
    }
    return exit_ok;
}

}  // namespace

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.seed_list.empty()) throw ConfigError("trace needs at least one seed: --seeds t,x[;t,x...]");
    PotentialSpec spec = potential_from(cfg);
    TraceOptions opt;
    opt.ds = cfg.get_double("ds", 1e-3);
    if (!(opt.ds > 0)) throw ConfigError("--ds must be positive");
    opt.max_len = cfg.has("steps") ? cfg.get_int("steps", 0) * opt.ds : cfg.get_double("max-len", 10.0);
    opt.use_dual = cfg.get_flag("dual");
    BBox box = bbox_from(cfg, {});
    opt.t_min = box.t_min;
    opt.t_max = box.t_max;
    opt.x_min = box.x_min;
    opt.x_max = box.x_max;
    const double drift_tol = cfg.get_double("drift-tol", 1e-5);

    std::vector<FieldLine> lines;
    for (std::size_t k = 0; k < cfg.seed_list.size(); ++k) {
        const Double seed = cfg.seed_list[k];
        try {
            lines.push_back(trace_field_line(spec, seed, opt));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            err << "numerical failure at seed " << k << ' ' << point_text(seed) << ": " << e.what() << '\n';
            return exit_numeric;
        }
        const auto& L = lines.back();
        err << "line " << k << " seed " << point_text(seed) << " points " << L.points.size() << " drift "
            << fmt("%.3e", L.invariant_drift) << " stop " << stop_reason_name(L.stop) << '\n';
        if (!(L.invariant_drift <= drift_tol)) {
            err << "numerical failure at seed " << k << ' ' << point_text(seed) << ": first-integral drift "
                << fmt("%.3e", L.invariant_drift) << " exceeds " << fmt("%.3e", drift_tol) << '\n';
            return exit_numeric;
        }
    }

    std::ostringstream csv;
    write_field_lines(csv, lines);
    emit(cfg.output_path, csv.str(), out);
    if (cfg.has("svg")) {
        std::vector<Polyline> polys;
        for (std::size_t k = 0; k < lines.size(); ++k) polys.push_back({std::to_string(k), lines[k].points});
        SvgOptions so;
        so.title = spec_name(spec) + (opt.use_dual ? " dual lines" : " field lines");
        emit(cfg.get("svg", ""), render_svg(polys, box, so), out);
    }
    return exit_ok;
}

int cmd_integrate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const int alpha = cfg.get_int("alpha", -1);
    HyperbolicCircleContour c;
    c.rho = cfg.get_double("rho", 1.0);
    c.psi_cutoff = cfg.get_double("cutoff", 1.0);
    if (!(c.rho > 0) || !(c.psi_cutoff > 0)) throw ConfigError("--rho and --cutoff must be positive");
    const int arcs = cfg.get_int("arcs", 4);
    if (arcs < 1 || arcs > 4) throw ConfigError("--arcs must be 1..4");
    c.quadrants.resize(arcs);
    if (cfg.has("center")) {
        auto v = cfg.get_list("center", {});
        if (v.size() != 2) throw ConfigError("--center expects t,x");
        c.center = {v[0], v[1]};
    }
    c.pinch_epsilon = cfg.get_double("pinch", 1e-6);
    if (!(c.pinch_epsilon > 0)) throw ConfigError("--pinch must be positive");
    const std::string mode = cfg.get("mode", alpha == -1 ? "arc" : "loop");
    if (mode != "arc" && mode != "loop") throw ConfigError("--mode expects arc or loop");

    Estimate e = residue_integral(c.center, alpha, c, mode == "arc" ? ContourMode::PerArc : ContourMode::ClosedLoop);
    std::ostringstream s;
    s << "alpha = " << alpha << "\nmode = " << mode << '\n';
    s << "value = " << fmt("%.12f", e.value.t) << " + j " << fmt("%.12f", e.value.x) << '\n';
    s << "error = " << fmt("%.3e", e.error) << '\n';
    if (alpha == -1 && mode == "arc") s << "ell_H per arc = " << fmt("%.12f", e.value.x / arcs) << '\n';
    emit(cfg.output_path, s.str(), out);
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    std::string suite = cfg.get("suite", cfg.positional.empty() ? "" : cfg.positional.front());
    if (suite.empty()) throw ConfigError("verify needs a suite: cr, wave, poly, srt or dual");
    auto checks = run_suite(suite, cfg.get_int("samples", 100), static_cast<unsigned long>(cfg.get_int("seed", 1)));
    std::ostringstream s;
    bool ok = print_checks(s, checks);
    s << (ok ? "all checks passed\n" : "some checks failed\n");
    emit(cfg.output_path, s.str(), out);
    return ok ? exit_ok : exit_numeric;
}

int cmd_poly(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const std::string op = cfg.get("op", "");
    std::ostringstream s;
    if (op == "add" || op == "sub" || op == "mul" || op == "div") {
        PolyOp p = op == "add" ? PolyOp::add : op == "sub" ? PolyOp::sub : op == "mul" ? PolyOp::mul : PolyOp::div;
        s << poly_text(poly_arithmetic(poly_from(cfg, "a"), poly_from(cfg, "b"), p)) << '\n';
    } else if (op == "norm") {
        s << format_double(pseudonorm(poly_from(cfg, "a"))) << '\n';
    } else if (op == "angles") {
        auto e = exp_and_angles(poly_from(cfg, "a"));
        s << "chi = (" << format_double(e.chi[0]) << ", " << format_double(e.chi[1]) << ", "
          << format_double(e.chi[2]) << ")\nnorm = " << format_double(e.norm) << "\noctant = (" << e.octant[0]
          << ", " << e.octant[1] << ", " << e.octant[2] << ")\n";
    } else if (op == "exp") {
        s << poly_text(exp_poly(poly_from(cfg, "a"))) << '\n';
    } else if (op == "conj") {
        auto c = conjugations(poly_from(cfg, "a"));
        s << "dagger = " << poly_text(c.dagger) << "\nddagger = " << poly_text(c.ddagger) << '\n';
    } else if (op == "nproduct") {
        s << format_double(nproduct(poly_from(cfg, "a"), poly_from(cfg, "b"), poly_from(cfg, "c"))) << '\n';
    } else if (op == "jbasis") {
        JBasisCoords j = basis_convert(poly_from(cfg, "a"));
        s << "(" << format_double(j[0]) << ", " << format_double(j[1]) << ", " << format_double(j[2]) << ")\n";
    } else {
        throw ConfigError("unknown poly op '" + op +
                          "'; expected add, sub, mul, div, norm, angles, exp, conj, nproduct or jbasis");
    }
    emit(cfg.output_path, s.str(), out);
    return exit_ok;
}

int cmd_srt_sim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string mode = cfg.get("mode", "force");
    if (mode != "force" && mode != "lorentz") throw ConfigError("--mode expects force or lorentz");
    const double mass = cfg.get_double("mass", 1.0), ds = cfg.get_double("ds", 1e-3);
    const int steps = cfg.get_int("steps", 1000), every = cfg.get_int("every", 100);
    if (!(mass > 0) || !(ds > 0) || steps < 0 || every < 1) throw ConfigError("need mass > 0, ds > 0, steps >= 0, every >= 1");
    const double v0 = cfg.get_double("v0", 0.0);
    if (!(std::fabs(v0) < 1)) throw ConfigError("--v0 must satisfy |v0| < 1");
    const double f = cfg.get_double("f", 1.0), q = cfg.get_double("q", 1.0), field = cfg.get_double("field", 1.0);

    ParticleState st{{}, boost(v0), mass, 0.0};
    ScalarField E = [field](const Double&) { return field; };
    std::ostringstream csv;
    csv << "s,t,x,v,VV\n";
    double drift = 0.0;
    auto row = [&] {
        double vv = star(st.velocity_2, st.velocity_2);
        drift = std::max(drift, std::fabs(vv - 1.0));
        csv << format_double(st.proper_time) << ',' << format_double(st.position.t) << ','
            << format_double(st.position.x) << ',' << format_double(st.velocity()) << ',' << format_double(vv) << '\n';
    };
    row();
    for (int k = 1; k <= steps; ++k) {
        st = mode == "force" ? dynamics_step(st, f, ds) : lorentz_force_step(st, q, E, ds);
        if (k % every == 0 || k == steps) row();
    }
    emit(cfg.output_path, csv.str(), out);
    const double push = mode == "force" ? f : q * field;
    double closed = std::tanh(std::atanh(v0) + push * st.proper_time / mass);
    err << "final v = " << format_double(st.velocity()) << ", closed form " << format_double(closed)
        << ", max |V*V - 1| = " << fmt("%.3e", drift) << '\n';
    return exit_ok;
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.get_flag("wave")) return render_wave(cfg, out, err);
    return render_net(cfg, out, err);
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "trace") return cmd_trace(cfg, out, err);
        if (cfg.command == "integrate") return cmd_integrate(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "poly") return cmd_poly(cfg, out, err);
        if (cfg.command == "srt-sim") return cmd_srt_sim(cfg, out, err);
        if (cfg.command == "render") return cmd_render(cfg, out, err);
        throw ConfigError("unknown command '" + cfg.command + "'");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return exit_numeric;
    }
}

}  // namespace dplane::cli
